//! Linear-time outcome formula for misère Red-Blue positions, plus the
//! grounded-edge strategy it rests on.
//!
//! With B and R the grounded blue/red counts, the classifier returns L when
//! R > B, R when B > R, and N when B = R; no Red-Blue misère position is P.
//! Note the orientation: a lone grounded blue edge supporting a red edge has
//! B = 1, R = 0, and exhaustive search shows Right wins it both ways, so
//! counting the other way around ("L when B > R") is wrong. That 2-edge
//! instance is kept as a permanent regression test.

use crate::error::{Error, Result};
use crate::position::{Move, Player, Position};
use crate::solver::OutcomeClass;

/// Misère outcome of a Red-Blue position from its grounded counts alone.
/// One pass over the edges; no game-tree search.
pub fn classify_misere_rb(p: &Position) -> Result<OutcomeClass> {
    if p.contains_green() {
        return Err(Error::GreenEdgePresent);
    }
    let counts = p.grounded_counts();
    Ok(if counts.red > counts.blue {
        OutcomeClass::L
    } else if counts.blue > counts.red {
        OutcomeClass::R
    } else {
        OutcomeClass::N
    })
}

/// The strategy behind the formula: cut one of your own grounded edges.
/// Returns the lowest-id grounded edge of the mover's color, or `None` if
/// there is no such edge. Pure selection, no winning claim by itself.
pub fn proof_strategy_move(p: &Position, mover: Player) -> Result<Option<Move>> {
    if p.contains_green() {
        return Err(Error::GreenEdgePresent);
    }
    Ok(p.edges()
        .iter()
        .find(|e| mover.can_cut(e.color) && p.is_grounded(e))
        .map(|e| Move::new(e.id)))
}
