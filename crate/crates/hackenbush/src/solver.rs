//! Exact outcome computation by memoized two-player search. This is the
//! brute-force oracle everything else is checked against, so it stays a
//! plain win/loss search: no component splitting (misère games do not
//! decompose the way normal-play values do), no pruning heuristics, moves
//! explored in ascending edge-id order for reproducibility.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::position::{Edge, Move, Player, Position, StateKey};

/// Play convention. It determines only the no-move base case: under Normal
/// the player to move with no legal moves loses, under Misere that player
/// wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlayConvention {
    Normal,
    Misere,
}

impl fmt::Display for PlayConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlayConvention::Normal => write!(f, "normal"),
            PlayConvention::Misere => write!(f, "misere"),
        }
    }
}

/// The four outcome classes: L (Left wins moving first or second), R
/// (Right wins both ways), N (first player wins), P (second player wins).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OutcomeClass {
    L,
    R,
    P,
    N,
}

impl OutcomeClass {
    pub fn letter(self) -> char {
        match self {
            OutcomeClass::L => 'L',
            OutcomeClass::R => 'R',
            OutcomeClass::P => 'P',
            OutcomeClass::N => 'N',
        }
    }

    /// Outcome under the Blue/Red color swap: L and R trade places, P and N
    /// are fixed.
    pub fn dual(self) -> OutcomeClass {
        match self {
            OutcomeClass::L => OutcomeClass::R,
            OutcomeClass::R => OutcomeClass::L,
            other => other,
        }
    }

    pub fn from_winners(left_moving_first: Player, right_moving_first: Player) -> OutcomeClass {
        match (left_moving_first, right_moving_first) {
            (Player::Left, Player::Left) => OutcomeClass::L,
            (Player::Right, Player::Right) => OutcomeClass::R,
            (Player::Left, Player::Right) => OutcomeClass::N,
            (Player::Right, Player::Left) => OutcomeClass::P,
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub max_depth: u64,
}

/// One search session: a root position, a convention, and the memo table
/// shared by every query against that root. StateKeys are edge subsets of
/// the root, so the table is meaningless across roots.
pub struct SearchSession {
    conv: PlayConvention,
    use_memo: bool,
    /// Root edges sorted by id; bit i of a state mask is edges[i].
    edges: Vec<Edge>,
    /// Per dense-vertex adjacency: (edge index, dense index of other end).
    adjacency: Vec<Vec<(usize, usize)>>,
    ground: Vec<usize>,
    memo: HashMap<StateKey, bool>,
    stats: SearchStats,
}

impl SearchSession {
    pub fn new(root: &Position, conv: PlayConvention) -> SearchSession {
        let edges = root.edges().to_vec();
        let vertex_ids: Vec<u32> = root.vertices().iter().copied().collect();
        let dense = |v: u32| vertex_ids.binary_search(&v).expect("endpoint in vertex set");
        let mut adjacency = vec![Vec::new(); vertex_ids.len()];
        for (i, e) in edges.iter().enumerate() {
            let (du, dv) = (dense(e.u), dense(e.v));
            adjacency[du].push((i, dv));
            if du != dv {
                adjacency[dv].push((i, du));
            }
        }
        let ground = root.ground().iter().map(|&v| dense(v)).collect();
        SearchSession {
            conv,
            use_memo: true,
            edges,
            adjacency,
            ground,
            memo: HashMap::new(),
            stats: SearchStats::default(),
        }
    }

    /// Disables the memo table; used to check memoization transparency.
    pub fn without_memo(mut self) -> SearchSession {
        self.use_memo = false;
        self
    }

    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    fn full_mask(&self) -> u64 {
        if self.edges.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.edges.len())
        }
    }

    /// Edges still connected to the ground when only `mask` survives.
    fn prune_mask(&self, mask: u64) -> u64 {
        let mut reached = vec![false; self.adjacency.len()];
        let mut frontier: Vec<usize> = Vec::new();
        for &g in &self.ground {
            if !reached[g] {
                reached[g] = true;
                frontier.push(g);
            }
        }
        let mut kept = 0u64;
        while let Some(v) = frontier.pop() {
            for &(edge_idx, other) in &self.adjacency[v] {
                if mask & (1 << edge_idx) == 0 {
                    continue;
                }
                kept |= 1 << edge_idx;
                if !reached[other] {
                    reached[other] = true;
                    frontier.push(other);
                }
            }
        }
        kept
    }

    /// True iff the mover wins the sub-position `mask` with optimal play.
    fn mover_wins(&mut self, mask: u64, mover: Player, depth: u64) -> bool {
        self.stats.nodes_expanded += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let mut cuttable = mask;
        for (i, e) in self.edges.iter().enumerate() {
            if !mover.can_cut(e.color) {
                cuttable &= !(1 << i);
            }
        }
        if cuttable == 0 {
            return self.conv == PlayConvention::Misere;
        }

        let key = StateKey { present: mask, mover };
        if self.use_memo {
            if let Some(&won) = self.memo.get(&key) {
                self.stats.memo_hits += 1;
                return won;
            }
        }

        let mut won = false;
        let mut remaining = cuttable;
        while remaining != 0 {
            let i = remaining.trailing_zeros();
            remaining &= remaining - 1;
            let child = self.prune_mask(mask & !(1 << i));
            if !self.mover_wins(child, mover.opponent(), depth + 1) {
                won = true;
                break;
            }
        }
        if self.use_memo {
            self.memo.insert(key, won);
        }
        won
    }

    /// Winner of the root position with `mover` to move.
    pub fn winner(&mut self, mover: Player) -> Player {
        if self.mover_wins(self.full_mask(), mover, 0) {
            mover
        } else {
            mover.opponent()
        }
    }

    pub fn outcome(&mut self) -> OutcomeClass {
        OutcomeClass::from_winners(self.winner(Player::Left), self.winner(Player::Right))
    }

    /// All winning first moves for the mover, ascending by edge id. Empty
    /// iff the mover loses.
    pub fn optimal_moves(&mut self, mover: Player) -> Vec<Move> {
        let full = self.full_mask();
        let mut winning = Vec::new();
        let candidates: Vec<(usize, u32)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| mover.can_cut(e.color))
            .map(|(i, e)| (i, e.id))
            .collect();
        for (i, id) in candidates {
            let child = self.prune_mask(full & !(1 << i));
            if !self.mover_wins(child, mover.opponent(), 1) {
                winning.push(Move::new(id));
            }
        }
        winning
    }
}

/// Exact winner of `p` under optimal play with `mover` to move.
pub fn winner(p: &Position, mover: Player, conv: PlayConvention) -> Result<Player> {
    Ok(SearchSession::new(p, conv).winner(mover))
}

/// Outcome class of `p`: winners with Left and Right moving first, combined.
pub fn outcome(p: &Position, conv: PlayConvention) -> Result<OutcomeClass> {
    Ok(SearchSession::new(p, conv).outcome())
}

/// All winning first moves, ascending by edge id; empty iff the mover loses.
pub fn optimal_moves(p: &Position, mover: Player, conv: PlayConvention) -> Result<Vec<Move>> {
    Ok(SearchSession::new(p, conv).optimal_moves(mover))
}
