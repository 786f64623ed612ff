use proptest::prelude::*;

use hackenbush::{
    merge_ground, outcome, random_position, Color, Edge, Move, OutcomeClass, Player,
    PlayConvention, Position, SearchSession,
};

const RBG: [Color; 3] = [Color::Blue, Color::Red, Color::Green];
const RB: [Color; 2] = [Color::Blue, Color::Red];

fn arb_position(max_edges: usize) -> impl Strategy<Value = Position> {
    (0..=max_edges, 1usize..=6, any::<u64>())
        .prop_map(|(edges, vertices, seed)| random_position(edges, vertices, &RBG, seed))
}

proptest! {
    #[test]
    fn pruning_is_idempotent(p in arb_position(10)) {
        let repruned =
            Position::new(p.ground().iter().copied(), p.edges().iter().copied()).unwrap();
        prop_assert!(p.same_game(&repruned));
    }

    #[test]
    fn apply_move_is_monotone(p in arb_position(10), pick in any::<prop::sample::Index>()) {
        prop_assume!(!p.is_empty());
        let cut = p.edges()[pick.index(p.edges().len())].id;
        let after = p.apply_move(Move::new(cut)).unwrap();
        prop_assert!(after.edges().iter().all(|e| e.id != cut && p.edge(e.id).is_some()));
    }

    #[test]
    fn serialization_round_trips(p in arb_position(10)) {
        let reparsed = Position::parse(&p.serialize()).unwrap();
        prop_assert!(p.same_game(&reparsed));
    }

    #[test]
    fn color_swap_duality(edges in 0usize..=7, seed in any::<u64>()) {
        let p = random_position(edges, 5, &RB, seed);
        let swapped = p.color_swapped();
        for conv in [PlayConvention::Normal, PlayConvention::Misere] {
            prop_assert_eq!(outcome(&swapped, conv).unwrap(), outcome(&p, conv).unwrap().dual());
        }
    }

    #[test]
    fn memoization_is_transparent(p in arb_position(8)) {
        for conv in [PlayConvention::Normal, PlayConvention::Misere] {
            let with = SearchSession::new(&p, conv).outcome();
            let without = SearchSession::new(&p, conv).without_memo().outcome();
            prop_assert_eq!(with, without);
        }
    }

    #[test]
    fn ground_merge_preserves_outcomes(
        p in arb_position(8),
        extra in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    ) {
        // Widen the ground by promoting a few existing vertices, then check
        // the merged position plays the same game.
        let vertices: Vec<u32> = p.vertices().iter().copied().collect();
        let mut ground: Vec<u32> = p.ground().iter().copied().collect();
        for idx in extra {
            ground.push(vertices[idx.index(vertices.len())]);
        }
        let widened = Position::new(ground, p.edges().iter().copied()).unwrap();
        let merged = merge_ground(&widened);
        for conv in [PlayConvention::Normal, PlayConvention::Misere] {
            prop_assert_eq!(outcome(&widened, conv).unwrap(), outcome(&merged, conv).unwrap());
        }
    }

    #[test]
    fn optimal_moves_are_deterministic_and_winning(p in arb_position(7)) {
        for conv in [PlayConvention::Normal, PlayConvention::Misere] {
            for mover in [Player::Left, Player::Right] {
                let a = hackenbush::optimal_moves(&p, mover, conv).unwrap();
                let b = hackenbush::optimal_moves(&p, mover, conv).unwrap();
                prop_assert_eq!(&a, &b);
                for m in &a {
                    let after = p.apply_move(*m).unwrap();
                    prop_assert_eq!(
                        hackenbush::winner(&after, mover.opponent(), conv).unwrap(),
                        mover
                    );
                }
            }
        }
    }
}

/// Pairwise non-adjacent grounded green edges: every play sequence has the
/// same length, so the game lasts exactly n moves and the two conventions
/// disagree exactly on who "wins by moving last".
#[test]
fn forced_length_games_flip_with_the_convention() {
    for n in 0..6u32 {
        let p = Position::new(
            [0],
            (0..n).map(|i| Edge::new(i, 0, i + 1, Color::Green)),
        )
        .unwrap();
        let normal = outcome(&p, PlayConvention::Normal).unwrap();
        let misere = outcome(&p, PlayConvention::Misere).unwrap();
        let expected_normal = if n % 2 == 1 { OutcomeClass::N } else { OutcomeClass::P };
        assert_eq!(normal, expected_normal, "n = {n}");
        assert_eq!(misere, expected_normal.flip_np(), "n = {n}");
    }
}

trait FlipNp {
    fn flip_np(self) -> Self;
}

impl FlipNp for OutcomeClass {
    fn flip_np(self) -> OutcomeClass {
        match self {
            OutcomeClass::N => OutcomeClass::P,
            OutcomeClass::P => OutcomeClass::N,
            other => other,
        }
    }
}

/// A game on all-grounded pairwise non-adjacent edges runs for exactly one
/// move per edge while both players still have moves.
#[test]
fn lone_edge_games_last_one_move_per_edge() {
    // Alternate colors so both players always have a move until the end.
    let n = 6u32;
    let p = Position::new(
        [0],
        (0..n).map(|i| {
            let c = if i % 2 == 0 { Color::Blue } else { Color::Red };
            Edge::new(i, 0, i + 1, c)
        }),
    )
    .unwrap();
    let mut state = p;
    let mut mover = Player::Left;
    let mut moves = 0;
    while let Some(m) = state.legal_moves(mover).first().copied() {
        state = state.apply_move(m).unwrap();
        mover = mover.opponent();
        moves += 1;
    }
    assert_eq!(moves, n);
}
