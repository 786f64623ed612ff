//! Exhaustive and seeded-random position generators, the verification
//! drivers that bind the grounded-count classifier and the misère reduction
//! to the search oracle, and the explorer for green-string collections.
//!
//! Generators emit duplicates up to isomorphism (no canonicalization); the
//! bounds are small enough that redundancy costs time, not correctness.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::classifier::classify_misere_rb;
use crate::position::{Color, Edge, Position};
use crate::reduction::{merge_ground, to_misere_instance};
use crate::solver::{outcome, OutcomeClass, PlayConvention};

/// Shape families for exhaustive generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeClass {
    /// Disjoint paths, each starting at the ground.
    Strings,
    /// Forests rooted at the ground.
    Trees,
    /// Arbitrary multigraphs with loops, ground = {0}.
    Graphs,
}

/// Exhaustive graph enumeration is capped at this many non-ground vertices
/// so the full suites stay under minutes at desk scale.
pub const GRAPH_MAX_NON_GROUND_VERTICES: u32 = 4;

/// SplitMix64: the fixed recurrence behind every seeded generator here, so
/// golden files stay portable. state += 0x9E3779B97F4A7C15; then the output
/// is the state mixed by two xor-shift-multiply rounds.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in `0..bound` by modulo; the bias at these bound
    /// sizes is irrelevant and the mapping is part of the fixed recurrence.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }
}

fn sorted_colors(colors: &[Color]) -> Vec<Color> {
    let mut cs = colors.to_vec();
    cs.sort();
    cs.dedup();
    assert!(!cs.is_empty(), "color set must be non-empty");
    cs
}

/// Calls `f` on every position of the shape class with at most `max_edges`
/// edges, each edge colored from `colors`, in a deterministic order. Every
/// emitted position is pruned.
pub fn enumerate_with(
    shape: ShapeClass,
    max_edges: usize,
    colors: &[Color],
    mut f: impl FnMut(&Position),
) {
    let colors = sorted_colors(colors);
    match shape {
        ShapeClass::Strings => {
            for_each_string_collection(max_edges, &colors, &colors, &mut |strings| {
                f(&string_collection_position(strings))
            })
        }
        ShapeClass::Trees => enumerate_trees(max_edges, &colors, &mut f),
        ShapeClass::Graphs => enumerate_graphs(max_edges, &colors, &mut f),
    }
}

/// Convenience collector over [`enumerate_with`].
pub fn enumerate_positions(shape: ShapeClass, max_edges: usize, colors: &[Color]) -> Vec<Position> {
    let mut out = Vec::new();
    enumerate_with(shape, max_edges, colors, |p| out.push(p.clone()));
    out
}

/// Enumerates multisets of strings (color sequences, ground outward) with
/// bounded total length. The first edge of each string draws from
/// `first_colors`, the rest from `rest_colors`; multisets are generated as
/// non-decreasing sequences over the sorted string universe, so each
/// collection appears exactly once.
fn for_each_string_collection(
    max_edges: usize,
    first_colors: &[Color],
    rest_colors: &[Color],
    f: &mut impl FnMut(&[Vec<Color>]),
) {
    let mut universe: Vec<Vec<Color>> = Vec::new();
    for len in 1..=max_edges {
        let mut partial: Vec<Color> = Vec::with_capacity(len);
        build_strings(len, first_colors, rest_colors, &mut partial, &mut universe);
    }
    universe.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    fn recurse(
        universe: &[Vec<Color>],
        min_idx: usize,
        budget: usize,
        chosen: &mut Vec<Vec<Color>>,
        f: &mut impl FnMut(&[Vec<Color>]),
    ) {
        f(chosen);
        for i in min_idx..universe.len() {
            let len = universe[i].len();
            if len > budget {
                continue;
            }
            chosen.push(universe[i].clone());
            recurse(universe, i, budget - len, chosen, f);
            chosen.pop();
        }
    }
    recurse(&universe, 0, max_edges, &mut Vec::new(), f);
}

fn build_strings(
    len: usize,
    first_colors: &[Color],
    rest_colors: &[Color],
    partial: &mut Vec<Color>,
    out: &mut Vec<Vec<Color>>,
) {
    if partial.len() == len {
        out.push(partial.clone());
        return;
    }
    let palette = if partial.is_empty() { first_colors } else { rest_colors };
    for &c in palette {
        partial.push(c);
        build_strings(len, first_colors, rest_colors, partial, out);
        partial.pop();
    }
}

/// A collection of strings as a position: all strings hang from ground
/// vertex 0, vertices and edge ids assigned in emission order.
fn string_collection_position(strings: &[Vec<Color>]) -> Position {
    let mut edges = Vec::new();
    let mut next_vertex = 1u32;
    let mut next_id = 0u32;
    for s in strings {
        let mut prev = 0u32;
        for &c in s {
            edges.push(Edge::new(next_id, prev, next_vertex, c));
            prev = next_vertex;
            next_vertex += 1;
            next_id += 1;
        }
    }
    Position::new([0], edges).expect("string collections are valid and pruned")
}

/// Forests rooted at the ground: vertex i (1-based) attaches to any earlier
/// vertex, vertex 0 being the ground; every parent array and coloring is
/// emitted.
fn enumerate_trees(max_edges: usize, colors: &[Color], f: &mut impl FnMut(&Position)) {
    for k in 0..=max_edges {
        let mut parents = vec![0u32; k];
        let mut coloring = vec![colors[0]; k];
        fill_tree(k, 0, &mut parents, &mut coloring, colors, f);
    }
}

fn fill_tree(
    k: usize,
    i: usize,
    parents: &mut [u32],
    coloring: &mut [Color],
    colors: &[Color],
    f: &mut impl FnMut(&Position),
) {
    if i == k {
        let edges = (0..k).map(|j| Edge::new(j as u32, parents[j], j as u32 + 1, coloring[j]));
        f(&Position::new([0], edges).expect("trees are valid and pruned"));
        return;
    }
    for parent in 0..=i as u32 {
        parents[i] = parent;
        for &c in colors {
            coloring[i] = c;
            fill_tree(k, i + 1, parents, coloring, colors, f);
        }
    }
}

/// Multigraphs with loops over vertices {0..V}, V = min(max_edges, cap),
/// ground {0}: multisets of (endpoint pair, color) items of size up to
/// max_edges, pruned before emission.
fn enumerate_graphs(max_edges: usize, colors: &[Color], f: &mut impl FnMut(&Position)) {
    let top = (max_edges as u32).min(GRAPH_MAX_NON_GROUND_VERTICES);
    let mut items: Vec<(u32, u32, Color)> = Vec::new();
    for u in 0..=top {
        for v in u..=top {
            for &c in colors {
                items.push((u, v, c));
            }
        }
    }

    fn recurse(
        items: &[(u32, u32, Color)],
        min_idx: usize,
        budget: usize,
        chosen: &mut Vec<(u32, u32, Color)>,
        f: &mut impl FnMut(&Position),
    ) {
        let edges = chosen
            .iter()
            .enumerate()
            .map(|(i, &(u, v, c))| Edge::new(i as u32, u, v, c));
        f(&Position::new([0], edges).expect("bounded multigraphs are valid"));
        if budget == 0 {
            return;
        }
        for i in min_idx..items.len() {
            chosen.push(items[i]);
            recurse(items, i, budget - 1, chosen, f);
            chosen.pop();
        }
    }
    recurse(&items, 0, max_edges, &mut Vec::new(), f);
}

/// Seeded random position: ground {0}, built edge by edge, each new edge
/// attached to a uniformly chosen already-reachable vertex so the result is
/// pruned by construction. Deterministic function of all arguments via
/// [`SplitMix64`]. Produces exactly `max_edges` edges; loops and
/// multi-edges arise naturally.
pub fn random_position(
    max_edges: usize,
    max_vertices: usize,
    colors: &[Color],
    seed: u64,
) -> Position {
    assert!(max_vertices >= 1);
    assert!(max_edges <= crate::position::MAX_EDGES);
    let colors = sorted_colors(colors);
    let mut rng = SplitMix64::new(seed);
    let mut vertex_count = 1u32; // vertex 0 is the ground
    let mut edges = Vec::with_capacity(max_edges);
    for id in 0..max_edges {
        let u = rng.below(vertex_count as usize) as u32;
        let can_grow = (vertex_count as usize) < max_vertices;
        let pick = rng.below(vertex_count as usize + usize::from(can_grow));
        let v = if pick == vertex_count as usize {
            vertex_count += 1;
            vertex_count - 1
        } else {
            pick as u32
        };
        let color = colors[rng.below(colors.len())];
        edges.push(Edge::new(id as u32, u, v, color));
    }
    Position::new([0], edges).expect("attachment to reachable vertices keeps the position pruned")
}

/// Bounds of one verification run; part of the report so a run is
/// reproducible from the report alone.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyParams {
    pub max_edges_exhaustive: usize,
    pub random_trials: usize,
    pub random_max_edges: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Mismatch {
    pub position: String,
    pub check: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one verification suite. `elapsed` is measured, not part of
/// the reproducible content, and is excluded from serialization.
#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: VerifyParams,
    pub positions_checked: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "suite {}: {} positions checked, {} mismatches ({:.2?})",
            self.suite,
            self.positions_checked,
            self.mismatches.len(),
            self.elapsed
        )
    }
}

/// Exhaustive Strings go two edges deeper than the shared bound: string
/// positions are cheap to solve and the formula's interesting cases are
/// long chains.
pub fn strings_bound(max_edges_exhaustive: usize) -> usize {
    max_edges_exhaustive + 2
}

fn for_each_red_blue_suite_position(params: &VerifyParams, mut f: impl FnMut(&Position)) {
    let rb = [Color::Blue, Color::Red];
    enumerate_with(ShapeClass::Strings, strings_bound(params.max_edges_exhaustive), &rb, &mut f);
    enumerate_with(ShapeClass::Graphs, params.max_edges_exhaustive, &rb, &mut f);
    let mut seeds = SplitMix64::new(params.seed);
    for _ in 0..params.random_trials {
        let p = random_position(
            params.random_max_edges,
            params.random_max_edges.max(1),
            &rb,
            seeds.next_u64(),
        );
        f(&p);
    }
}

/// Checks the grounded-count misère classifier against the search oracle on
/// every Red-Blue position of the exhaustive suites plus seeded random
/// trials.
pub fn verify_misere_formula(params: VerifyParams) -> VerificationReport {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for_each_red_blue_suite_position(&params, |p| {
        checked += 1;
        let oracle = outcome(p, PlayConvention::Misere).expect("suite positions fit the solver");
        let formula = classify_misere_rb(p).expect("suites are Red-Blue");
        if oracle != formula {
            mismatches.push(Mismatch {
                position: p.serialize_compact(),
                check: "classifier = misere oracle".into(),
                expected: oracle.to_string(),
                got: formula.to_string(),
            });
        }
    });
    mismatches.sort_by(|a, b| a.position.cmp(&b.position).then_with(|| a.check.cmp(&b.check)));
    VerificationReport {
        suite: "theorem1".into(),
        params,
        positions_checked: checked,
        mismatches,
        elapsed: start.elapsed(),
    }
}

/// Checks the reduction on every Red-Blue suite position: the misère
/// instance's outcome equals the merged position's normal-play outcome, and
/// merging the ground changes no outcome under either convention.
pub fn verify_reduction(params: VerifyParams) -> VerificationReport {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for_each_red_blue_suite_position(&params, |p| {
        checked += 1;
        let merged = merge_ground(p);
        let instance = to_misere_instance(p).expect("suites are Red-Blue");
        let solve = |q: &Position, conv| outcome(q, conv).expect("suite positions fit the solver");
        let mut check = |name: &str, expected: OutcomeClass, got: OutcomeClass| {
            if expected != got {
                mismatches.push(Mismatch {
                    position: p.serialize_compact(),
                    check: name.into(),
                    expected: expected.to_string(),
                    got: got.to_string(),
                });
            }
        };
        check(
            "misere(G_m) = normal(G')",
            solve(&merged, PlayConvention::Normal),
            solve(&instance, PlayConvention::Misere),
        );
        check(
            "normal(G) = normal(G')",
            solve(p, PlayConvention::Normal),
            solve(&merged, PlayConvention::Normal),
        );
        check(
            "misere(G) = misere(G')",
            solve(p, PlayConvention::Misere),
            solve(&merged, PlayConvention::Misere),
        );
    });
    mismatches.sort_by(|a, b| a.position.cmp(&b.position).then_with(|| a.check.cmp(&b.check)));
    VerificationReport {
        suite: "reduction".into(),
        params,
        positions_checked: checked,
        mismatches,
        elapsed: start.elapsed(),
    }
}

/// One row of the green-string explorer table.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ExplorerRow {
    pub position: String,
    pub outcome: String,
}

/// Enumerates collections of strings whose grounded (first) edge is green
/// and tabulates their misère outcomes. With `strict`, green appears
/// nowhere except the grounded edge; otherwise the higher edges are
/// unrestricted. Rows are sorted by serialized position; the table states
/// outcomes only, it draws no conclusion.
pub fn explore_green_strings(max_edges: usize, strict: bool) -> Vec<ExplorerRow> {
    let first = [Color::Green];
    let rest: &[Color] = if strict {
        &[Color::Blue, Color::Red]
    } else {
        &[Color::Blue, Color::Red, Color::Green]
    };
    let mut rows = Vec::new();
    for_each_string_collection(max_edges, &first, rest, &mut |strings| {
        let p = string_collection_position(strings);
        let o = outcome(&p, PlayConvention::Misere).expect("string positions fit the solver");
        rows.push(ExplorerRow { position: p.serialize_compact(), outcome: o.to_string() });
    });
    rows.sort_by(|a, b| a.position.cmp(&b.position));
    rows
}
