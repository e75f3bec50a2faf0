use maxleaf_cli::format::{parse_graph, parse_tree, write_graph, write_tree};
use maxleaf_core::gen::gen_random;
use proptest::prelude::*;

proptest! {
    #[test]
    fn graph_text_round_trips(n in 1usize..30, p in 0.0f64..0.5, seed in any::<u64>()) {
        let d = gen_random(n, p, seed).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&d)).unwrap(), d);
    }

    #[test]
    fn tree_text_round_trips(n in 1usize..30, seed in any::<u64>()) {
        let d = gen_random(n, 0.1, seed).unwrap();
        let t = d.bfs_tree().unwrap();
        let back = parse_tree(&write_tree(&t)).unwrap();
        prop_assert_eq!(d.verify(&back), Ok(t.leaf_count()));
        prop_assert_eq!(back, t);
    }

    #[test]
    fn garbage_never_panics(text in "[0-9 #\\n]{0,60}") {
        let _ = parse_graph(&text);
        let _ = parse_tree(&text);
    }
}
