use pathnum::oracle::{brute_pn, catalog};
use pathnum::subcubic::{partition_subcubic, pn_subcubic};

#[test]
fn formula_matches_oracle_on_small_subcubic_catalog() {
    for g in catalog::connected_graphs_up_to(7, true) {
        let expected = brute_pn(&g).unwrap();
        assert_eq!(pn_subcubic(&g).unwrap(), expected, "{}", g.to_text());
        let p = partition_subcubic(&g).unwrap();
        p.check(&g).unwrap();
        assert_eq!(p.len(), expected);
    }
}
