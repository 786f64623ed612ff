//! Transformation from normal-play Red-Blue positions to misère
//! Red-Blue-Green instances: merge the ground into one vertex, then hang
//! the whole graph from a fresh ground through a single green edge. The
//! resulting game's misère outcome equals the merged position's normal-play
//! outcome, because the lone green edge is the terminal move nobody wants
//! to make.

use crate::error::{Error, Result};
use crate::position::{Color, Edge, Position};

/// Identifies all ground vertices into a single fresh vertex (the smallest
/// unused vertex id). Edge ids and colors are preserved; an edge joining two
/// old ground vertices becomes a loop at the merged vertex. Outcomes are
/// invariant under this operation for both conventions, which the
/// verification suites check rather than assume.
pub fn merge_ground(p: &Position) -> Position {
    let merged = p.fresh_vertex();
    let redirect = |v: u32| if p.ground().contains(&v) { merged } else { v };
    let edges = p
        .edges()
        .iter()
        .map(|e| Edge::new(e.id, redirect(e.u), redirect(e.v), e.color));
    Position::new([merged], edges).expect("merging preserves validity and prunedness")
}

/// Builds the misère instance from a Red-Blue position `p`: merge the
/// ground into a vertex v*, add a fresh ground vertex g0, and join them by
/// one green edge whose id is one greater than the maximum edge id of `p`
/// (0 for empty `p`). The result has exactly one grounded edge and it is
/// green; original edge ids are unchanged.
pub fn to_misere_instance(p: &Position) -> Result<Position> {
    if p.contains_green() {
        return Err(Error::GreenEdgePresent);
    }
    // v* and g0 take the two smallest vertex ids unused in p.
    let v_star = p.fresh_vertex();
    let g0 = (v_star + 1..)
        .find(|v| !p.vertices().contains(v))
        .expect("u32 range has an unused id");
    let redirect = |v: u32| if p.ground().contains(&v) { v_star } else { v };
    let green_id = p.max_edge_id().map_or(0, |id| id + 1);
    let edges = p
        .edges()
        .iter()
        .map(|e| Edge::new(e.id, redirect(e.u), redirect(e.v), e.color))
        .chain([Edge::new(green_id, g0, v_star, Color::Green)]);
    Position::new([g0], edges)
}
