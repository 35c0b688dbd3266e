use proptest::prelude::*;
use robusta::budget::parse_budget;
use robusta::formats::{
    parse_ideal, parse_matrix, parse_monomial_ideal, write_ideal, write_matrix, write_monomial_ideal,
};
use robusta_core::{Binomial, BinomialIdeal, Budget, IntegerMatrix, Monomial, MonomialIdeal, VariableContext};

fn binomial(n: usize) -> impl Strategy<Value = Option<Binomial>> {
    (prop::collection::vec(0u32..4, n), prop::collection::vec(0u32..4, n))
        .prop_map(|(a, b)| Binomial::new(Monomial::new(a), Monomial::new(b)).ok())
}

fn ideal() -> impl Strategy<Value = BinomialIdeal> {
    (2usize..6)
        .prop_flat_map(|n| prop::collection::vec(binomial(n), 1..5).prop_map(move |bs| (n, bs)))
        .prop_filter_map("needs a generator", |(n, bs)| {
            let gens: Vec<Binomial> = bs.into_iter().flatten().collect();
            (!gens.is_empty()).then(|| BinomialIdeal::new(VariableContext::default_for(n).unwrap(), gens).unwrap())
        })
}

proptest! {
    #[test]
    fn ideal_text_round_trips(i in ideal()) {
        let parsed = parse_ideal(&write_ideal(&i)).unwrap();
        prop_assert!(parsed.scale.is_none());
        prop_assert_eq!(parsed.ideal, i);
    }

    #[test]
    fn matrix_round_trips(rows in prop::collection::vec(prop::collection::vec(-20i64..20, 4), 1..4)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntegerMatrix::from_rows(&refs).unwrap();
        let parsed = parse_matrix(&write_matrix(&m)).unwrap();
        prop_assert_eq!(parsed.matrix, m);
    }

    #[test]
    fn monomial_ideal_round_trips(gens in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..6)) {
        let ctx = VariableContext::default_for(4).unwrap();
        let ideal = MonomialIdeal::with_nvars(4, gens.into_iter().map(Monomial::new).filter(|m| !m.is_one()).collect());
        prop_assume!(!ideal.is_empty());
        let parsed = parse_monomial_ideal(&write_monomial_ideal(&ctx, &ideal)).unwrap();
        // variables are inferred in order of appearance; map them back
        let pos: Vec<usize> = parsed.context.names().iter().map(|n| ctx.index_of(n).unwrap()).collect();
        let back = MonomialIdeal::with_nvars(4, parsed.ideal.generators().iter().map(|g| {
            let mut e = vec![0u32; 4];
            for (k, &x) in g.exponents().iter().enumerate() {
                e[pos[k]] = x;
            }
            Monomial::new(e)
        }).collect());
        prop_assert_eq!(back, ideal);
    }

    #[test]
    fn uniform_budgets_parse(n in 1u64..1_000_000) {
        let b = parse_budget(&n.to_string(), Budget::default()).unwrap();
        prop_assert_eq!((b.spairs, b.cells, b.multidegrees), (n, n, n));
    }
}

#[test]
fn keyed_budget_keeps_unset_fields() {
    let b = parse_budget("cells=7", Budget::uniform(3)).unwrap();
    assert_eq!((b.spairs, b.cells, b.multidegrees), (3, 7, 3));
    assert!(parse_budget("0", Budget::default()).is_err());
    assert!(parse_budget("cells=", Budget::default()).is_err());
}
