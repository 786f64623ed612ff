//! The game-state data model: colored multigraphs attached to a ground,
//! parsing and serialization of the position file format, grounded-edge
//! accounting, move generation and move application with connectivity
//! pruning.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on edges per position, so a surviving-edge set always fits a
/// 64-bit [`StateKey`]. Exhaustive search is infeasible far below this
/// anyway.
pub const MAX_EDGES: usize = 64;

/// Edge color. Blue edges are cut by Left, Red by Right, Green by both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Blue,
    Red,
    Green,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
            Color::Green => 'G',
        }
    }

    pub fn from_letter(c: &str) -> Option<Color> {
        match c {
            "B" => Some(Color::Blue),
            "R" => Some(Color::Red),
            "G" => Some(Color::Green),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    /// Left cuts {Blue, Green}; Right cuts {Red, Green}.
    pub fn can_cut(self, color: Color) -> bool {
        match color {
            Color::Blue => self == Player::Left,
            Color::Red => self == Player::Right,
            Color::Green => true,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Left => write!(f, "Left"),
            Player::Right => write!(f, "Right"),
        }
    }
}

/// A single colored edge. `u == v` is a loop. Multi-edges (same endpoints,
/// distinct ids) are permitted, which is why moves refer to edge ids rather
/// than endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: u32,
    pub u: u32,
    pub v: u32,
    pub color: Color,
}

impl Edge {
    pub fn new(id: u32, u: u32, v: u32, color: Color) -> Edge {
        Edge { id, u, v, color }
    }

    pub fn is_loop(self) -> bool {
        self.u == self.v
    }

    pub fn touches(self, vertex: u32) -> bool {
        self.u == vertex || self.v == vertex
    }
}

/// A move cuts one edge, identified by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub edge_id: u32,
}

impl Move {
    pub fn new(edge_id: u32) -> Move {
        Move { edge_id }
    }
}

/// Number of grounded edges of each color. A loop at a ground vertex counts
/// once.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GroundedCounts {
    pub blue: usize,
    pub red: usize,
    pub green: usize,
}

/// Memo key for one search session: the set of surviving edges as a bit
/// vector over the root position's edges, plus the player to move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateKey {
    pub present: u64,
    pub mover: Player,
}

/// A pruned Hackenbush position: every edge lies in a connected component
/// containing a ground vertex. All constructors and operations enforce this,
/// so a `Position` in hand is always pruned.
///
/// Positions are immutable values; operations return new positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    vertices: BTreeSet<u32>,
    /// Sorted ascending by id.
    edges: Vec<Edge>,
    ground: BTreeSet<u32>,
}

impl Position {
    /// Builds a position from a ground set and edge list. Vertices are
    /// implied by the ground and the edge endpoints. The input is pruned.
    pub fn new(
        ground: impl IntoIterator<Item = u32>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Position> {
        let ground: BTreeSet<u32> = ground.into_iter().collect();
        if ground.is_empty() {
            return Err(Error::NoGround);
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges { count: edges.len(), max: MAX_EDGES });
        }
        edges.sort_by_key(|e| e.id);
        for pair in edges.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::DuplicateEdgeId { line: 0, id: pair[0].id });
            }
        }
        let mut vertices = ground.clone();
        for e in &edges {
            vertices.insert(e.u);
            vertices.insert(e.v);
        }
        let edges = prune(&ground, edges);
        Ok(Position { vertices, edges, ground })
    }

    pub fn empty(ground_vertex: u32) -> Position {
        Position::new([ground_vertex], []).expect("single ground vertex is valid")
    }

    pub fn vertices(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    /// Surviving edges, sorted ascending by id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn ground(&self) -> &BTreeSet<u32> {
        &self.ground
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn is_grounded(&self, e: &Edge) -> bool {
        self.ground.contains(&e.u) || self.ground.contains(&e.v)
    }

    pub fn contains_green(&self) -> bool {
        self.edges.iter().any(|e| e.color == Color::Green)
    }

    pub fn max_edge_id(&self) -> Option<u32> {
        self.edges.last().map(|e| e.id)
    }

    /// Smallest non-negative integer not used as a vertex id.
    pub fn fresh_vertex(&self) -> u32 {
        let mut candidate = 0;
        for &v in &self.vertices {
            if v == candidate {
                candidate += 1;
            } else if v > candidate {
                break;
            }
        }
        candidate
    }

    pub fn grounded_counts(&self) -> GroundedCounts {
        let mut counts = GroundedCounts::default();
        for e in &self.edges {
            if self.is_grounded(e) {
                match e.color {
                    Color::Blue => counts.blue += 1,
                    Color::Red => counts.red += 1,
                    Color::Green => counts.green += 1,
                }
            }
        }
        counts
    }

    /// Edges the mover may cut, ascending by id.
    pub fn legal_moves(&self, mover: Player) -> Vec<Move> {
        self.edges
            .iter()
            .filter(|e| mover.can_cut(e.color))
            .map(|e| Move::new(e.id))
            .collect()
    }

    /// Removes the edge, then the pruning closure drops every edge no longer
    /// connected to the ground. Color-agnostic; move legality for a specific
    /// mover is the caller's concern.
    pub fn apply_move(&self, m: Move) -> Result<Position> {
        if self.edge(m.edge_id).is_none() {
            return Err(Error::UnknownEdge { id: m.edge_id });
        }
        let surviving: Vec<Edge> =
            self.edges.iter().copied().filter(|e| e.id != m.edge_id).collect();
        Ok(Position {
            vertices: self.vertices.clone(),
            edges: prune(&self.ground, surviving),
            ground: self.ground.clone(),
        })
    }

    /// Memo key relative to `root`: bit i is set iff the i-th edge of `root`
    /// (in id order) survives in `self`.
    pub fn state_key(&self, mover: Player, root: &Position) -> Result<StateKey> {
        let mut present = 0u64;
        for e in &self.edges {
            match root.edges.binary_search_by_key(&e.id, |r| r.id) {
                Ok(i) => present |= 1 << i,
                Err(_) => return Err(Error::EdgeNotInRoot { id: e.id }),
            }
        }
        Ok(StateKey { present, mover })
    }

    /// Parses the line-oriented position file format:
    ///
    /// ```text
    /// # comment
    /// ground <vid> [<vid> ...]
    /// edge <eid> <u> <v> <B|R|G>
    /// ```
    ///
    /// Multiple `ground` lines take the union. Ungrounded edges described by
    /// the file are pruned away.
    pub fn parse(text: &str) -> Result<Position> {
        let mut ground: BTreeSet<u32> = BTreeSet::new();
        let mut extra_vertices: BTreeSet<u32> = BTreeSet::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut seen_ids: BTreeSet<u32> = BTreeSet::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "ground" => {
                    if fields.len() < 2 {
                        return Err(Error::Syntax {
                            line: line_no,
                            msg: "ground line needs at least one vertex id".into(),
                        });
                    }
                    for f in &fields[1..] {
                        ground.insert(parse_id(f, line_no)?);
                    }
                }
                "edge" => {
                    if fields.len() != 5 {
                        return Err(Error::Syntax {
                            line: line_no,
                            msg: "expected: edge <eid> <u> <v> <color>".into(),
                        });
                    }
                    let id = parse_id(fields[1], line_no)?;
                    let u = parse_id(fields[2], line_no)?;
                    let v = parse_id(fields[3], line_no)?;
                    let color = Color::from_letter(fields[4]).ok_or(Error::UnknownColor {
                        line: line_no,
                        letter: fields[4].to_string(),
                    })?;
                    if !seen_ids.insert(id) {
                        return Err(Error::DuplicateEdgeId { line: line_no, id });
                    }
                    extra_vertices.insert(u);
                    extra_vertices.insert(v);
                    edges.push(Edge::new(id, u, v, color));
                }
                other => {
                    return Err(Error::Syntax {
                        line: line_no,
                        msg: format!("unknown directive '{other}'"),
                    });
                }
            }
        }
        if ground.is_empty() {
            return Err(Error::NoGround);
        }
        Position::new(ground, edges)
    }

    /// Deterministic text form: one `ground` line with sorted vertex ids,
    /// then edges sorted by id. Vertices with no surviving incident edge are
    /// not serialized (they are unobservable to play).
    pub fn serialize(&self) -> String {
        let mut out = String::from("ground");
        for v in &self.ground {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str(&format!("edge {} {} {} {}\n", e.id, e.u, e.v, e.color));
        }
        out
    }

    /// Single-line form for tables and mismatch reports.
    pub fn serialize_compact(&self) -> String {
        self.serialize().trim_end().replace('\n', "; ")
    }

    /// Play-equivalence: same ground set and same edge list. Ignores
    /// unobservable isolated vertices.
    pub fn same_game(&self, other: &Position) -> bool {
        self.ground == other.ground && self.edges == other.edges
    }

    /// Swaps Blue and Red on every edge; Green is fixed. Used by the
    /// color-swap duality checks.
    pub fn color_swapped(&self) -> Position {
        let edges = self.edges.iter().map(|e| {
            let color = match e.color {
                Color::Blue => Color::Red,
                Color::Red => Color::Blue,
                Color::Green => Color::Green,
            };
            Edge { color, ..*e }
        });
        Position {
            vertices: self.vertices.clone(),
            edges: edges.collect(),
            ground: self.ground.clone(),
        }
    }
}

fn parse_id(field: &str, line: usize) -> Result<u32> {
    field.parse::<u32>().map_err(|_| Error::Syntax {
        line,
        msg: format!("'{field}' is not a non-negative integer"),
    })
}

/// Pruning closure: keep exactly the edges whose component contains a ground
/// vertex, i.e. whose endpoints are reachable from the ground via surviving
/// edges. `edges` must be sorted by id; order is preserved.
fn prune(ground: &BTreeSet<u32>, edges: Vec<Edge>) -> Vec<Edge> {
    let mut reachable: BTreeSet<u32> = ground.clone();
    let mut frontier: Vec<u32> = ground.iter().copied().collect();
    while let Some(v) = frontier.pop() {
        for e in &edges {
            let next = if e.u == v {
                e.v
            } else if e.v == v {
                e.u
            } else {
                continue;
            };
            if reachable.insert(next) {
                frontier.push(next);
            }
        }
    }
    edges.into_iter().filter(|e| reachable.contains(&e.u)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(ground: &[u32], edges: &[(u32, u32, u32, Color)]) -> Position {
        Position::new(
            ground.iter().copied(),
            edges.iter().map(|&(id, u, v, c)| Edge::new(id, u, v, c)),
        )
        .unwrap()
    }

    #[test]
    fn parse_single_blue_edge() {
        let p = Position::parse("ground 0\nedge 0 0 1 B").unwrap();
        assert_eq!(p.edges(), &[Edge::new(0, 0, 1, Color::Blue)]);
        assert_eq!(p.grounded_counts(), GroundedCounts { blue: 1, red: 0, green: 0 });
    }

    #[test]
    fn parse_prunes_ungrounded_edge() {
        let p = Position::parse("ground 0\nedge 0 5 6 R").unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn parse_green_loop_at_ground() {
        let p = Position::parse("ground 0\nedge 0 0 0 G").unwrap();
        assert_eq!(p.edges(), &[Edge::new(0, 0, 0, Color::Green)]);
        assert_eq!(p.grounded_counts().green, 1);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let p = Position::parse("# header\n\nground 0 3\n# mid\nedge 1 3 4 R\n").unwrap();
        assert_eq!(p.edges().len(), 1);
        assert_eq!(p.ground().len(), 2);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Position::parse("edge 0 0 1 B"), Err(Error::NoGround));
        assert!(matches!(
            Position::parse("ground 0\nedge 0 0 1 B\nedge 0 1 2 R"),
            Err(Error::DuplicateEdgeId { line: 3, id: 0 })
        ));
        assert!(matches!(
            Position::parse("ground 0\nedge 0 0 1 X"),
            Err(Error::UnknownColor { line: 2, .. })
        ));
        assert!(matches!(
            Position::parse("ground 0\nedge 0 0 B"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            Position::parse("hello"),
            Err(Error::Syntax { line: 1, .. })
        ));
    }

    #[test]
    fn too_many_edges_rejected() {
        let mut text = String::from("ground 0\n");
        for i in 0..65 {
            text.push_str(&format!("edge {i} 0 {} B\n", i + 1));
        }
        assert!(matches!(Position::parse(&text), Err(Error::TooManyEdges { count: 65, .. })));
    }

    #[test]
    fn serialize_empty() {
        assert_eq!(Position::empty(0).serialize(), "ground 0\n");
    }

    #[test]
    fn serialize_round_trip() {
        let p = pos(&[0], &[(2, 0, 1, Color::Blue), (0, 0, 2, Color::Red)]);
        let q = Position::parse(&p.serialize()).unwrap();
        assert!(p.same_game(&q));
    }

    #[test]
    fn grounded_counts_ignore_interior_edges() {
        // g-a blue, g-b red, a-c red: only the first two are grounded.
        let p = pos(
            &[0],
            &[(0, 0, 1, Color::Blue), (1, 0, 2, Color::Red), (2, 1, 3, Color::Red)],
        );
        assert_eq!(p.grounded_counts(), GroundedCounts { blue: 1, red: 1, green: 0 });
    }

    #[test]
    fn legal_moves_by_color() {
        let p = pos(&[0], &[(0, 0, 1, Color::Blue), (1, 0, 2, Color::Red)]);
        assert_eq!(p.legal_moves(Player::Left), vec![Move::new(0)]);
        assert_eq!(p.legal_moves(Player::Right), vec![Move::new(1)]);
        let g = pos(&[0], &[(0, 0, 1, Color::Green)]);
        assert_eq!(g.legal_moves(Player::Right), vec![Move::new(0)]);
        assert!(Position::empty(0).legal_moves(Player::Left).is_empty());
    }

    #[test]
    fn apply_move_prunes_support() {
        let p = pos(&[0], &[(0, 0, 1, Color::Blue), (1, 1, 2, Color::Red)]);
        assert!(p.apply_move(Move::new(0)).unwrap().is_empty());
        let q = p.apply_move(Move::new(1)).unwrap();
        assert_eq!(q.edges(), &[Edge::new(0, 0, 1, Color::Blue)]);
        assert_eq!(p.apply_move(Move::new(7)), Err(Error::UnknownEdge { id: 7 }));
    }

    #[test]
    fn apply_move_prunes_loop_with_support() {
        // g-a blue, a-a green loop, g-b red; cutting the blue edge drops the loop.
        let p = pos(
            &[0],
            &[(0, 0, 1, Color::Blue), (1, 1, 1, Color::Green), (2, 0, 2, Color::Red)],
        );
        let q = p.apply_move(Move::new(0)).unwrap();
        assert_eq!(q.edges(), &[Edge::new(2, 0, 2, Color::Red)]);
    }

    #[test]
    fn state_keys() {
        let root = pos(&[0], &[(0, 0, 1, Color::Blue), (1, 0, 2, Color::Red)]);
        let k1 = root.state_key(Player::Left, &root).unwrap();
        let k2 = root.state_key(Player::Left, &root).unwrap();
        assert_eq!(k1, k2);
        assert_ne!(k1, root.state_key(Player::Right, &root).unwrap());
        let after0 = root.apply_move(Move::new(0)).unwrap();
        let after1 = root.apply_move(Move::new(1)).unwrap();
        assert_ne!(
            after0.state_key(Player::Left, &root).unwrap(),
            after1.state_key(Player::Left, &root).unwrap()
        );
        let stranger = pos(&[0], &[(9, 0, 1, Color::Blue)]);
        assert_eq!(
            stranger.state_key(Player::Left, &root),
            Err(Error::EdgeNotInRoot { id: 9 })
        );
    }

    #[test]
    fn pruning_is_idempotent_and_monotone() {
        let p = pos(
            &[0],
            &[
                (0, 0, 1, Color::Blue),
                (1, 1, 2, Color::Red),
                (2, 2, 2, Color::Green),
                (3, 0, 3, Color::Red),
            ],
        );
        let once = p.apply_move(Move::new(0)).unwrap();
        // Re-running the closure over the surviving edges changes nothing.
        let twice =
            Position::new(once.ground().iter().copied(), once.edges().iter().copied()).unwrap();
        assert!(once.same_game(&twice));
        for e in once.edges() {
            assert!(p.edge(e.id).is_some());
            assert_ne!(e.id, 0);
        }
    }

    #[test]
    fn fresh_vertex_is_mex() {
        let p = pos(&[0], &[(0, 0, 1, Color::Blue), (1, 1, 3, Color::Red)]);
        assert_eq!(p.fresh_vertex(), 2);
        assert_eq!(Position::empty(0).fresh_vertex(), 1);
        assert_eq!(Position::empty(3).fresh_vertex(), 0);
    }
}
