use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stringtop::dialgebra::{examples, text as dtext, Dialgebra};
use stringtop::graph;
use stringtop::linear::{combine, permute_factors, swap_graded, tensor, FormalSum, Symbol, Tensor, TensorSum};
use stringtop::surface::{bracket_words, erase_mark, mark_all, surface_from_symbol, CyclicWord, Letter, SurfaceSymbol};
use stringtop::tqft::{self, TopologicalType};
use stringtop::{suites, Rational, Scalar};

fn q() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..6).prop_map(|(p, d)| Rational::from_int(p) / Rational::from_int(d))
}

fn sym(i: usize) -> Symbol {
    // a, b even; y odd
    [Symbol::new("a", 0), Symbol::new("b", 0), Symbol::new("y", 1)][i].clone()
}

fn tensors(arity: usize) -> impl Strategy<Value = TensorSum<Symbol, Rational>> {
    prop::collection::vec((prop::collection::vec(0usize..3, arity), q()), 0..5).prop_map(|terms| {
        FormalSum::from_terms(terms.into_iter().map(|(ix, c)| (Tensor::new(ix.into_iter().map(sym).collect()), c)))
    })
}

fn vectors() -> impl Strategy<Value = FormalSum<Symbol, Rational>> {
    prop::collection::vec((0usize..3, q()), 0..4).prop_map(|t| FormalSum::from_terms(t.into_iter().map(|(i, c)| (sym(i), c))))
}

fn words(s: SurfaceSymbol, max: usize) -> impl Strategy<Value = CyclicWord> {
    (any::<u64>(), 1..=max).prop_map(move |(seed, len)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        suites::random_cyclic_word(&s, &mut rng, len)
    })
}

fn types() -> impl Strategy<Value = TopologicalType> {
    (0usize..3, 1usize..4, 1usize..4).prop_map(|(g, m, n)| TopologicalType::new(g, m, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn combine_is_scaled_sum(v in vectors(), w in vectors(), c in q(), d in q()) {
        let out = combine(&v, &w, &c, &d).unwrap();
        prop_assert_eq!(out, v.scaled(&c).plus(&w.scaled(&d)));
    }

    #[test]
    fn combine_rejects_mixed_spaces(v in vectors(), w in vectors()) {
        let one = Rational::from_int(1);
        prop_assert!(combine(&v.clone().in_space("V"), &w.clone().in_space("W"), &one, &one).is_err());
        prop_assert!(combine(&v.in_space("V"), &w.in_space("V"), &one, &one).is_ok());
    }

    #[test]
    fn tensor_is_bilinear(v1 in tensors(1), v2 in tensors(1), w in tensors(2), c in q()) {
        let lhs = tensor(&v1.scaled(&c).plus(&v2), &w);
        let rhs = tensor(&v1, &w).scaled(&c).plus(&tensor(&v2, &w));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_is_an_involution(v in tensors(2)) {
        prop_assert_eq!(swap_graded(&swap_graded(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn permutations_compose(v in tensors(3), p in Just([0usize, 1, 2]).prop_shuffle(), r in Just([0usize, 1, 2]).prop_shuffle()) {
        let composed: Vec<usize> = (0..3).map(|i| p[r[i]]).collect();
        let twice = permute_factors(&permute_factors(&v, &p).unwrap(), &r).unwrap();
        prop_assert_eq!(twice, permute_factors(&v, &composed).unwrap());
    }

    #[test]
    fn structure_maps_are_linear(seed in any::<u64>(), c in q()) {
        let d: Dialgebra<Rational> = examples::dual_numbers();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick = |rng: &mut ChaCha8Rng| {
            use rand::Rng;
            let names = ["e", "x"];
            let t: Vec<Symbol> = (0..2).map(|_| d.symbol(names[rng.gen_range(0..2)]).unwrap()).collect();
            TensorSum::term(Tensor::new(t), Rational::from_int(rng.gen_range(-5..5)))
        };
        let (v, w) = (pick(&mut rng), pick(&mut rng));
        let lhs = d.product_at(&v.scaled(&c).plus(&w), 0).unwrap();
        let rhs = d.product_at(&v, 0).unwrap().scaled(&c).plus(&d.product_at(&w, 0).unwrap());
        prop_assert_eq!(lhs, rhs);
        let lhs = d.coproduct_at(&v.scaled(&c).plus(&w), 1).unwrap();
        let rhs = d.coproduct_at(&v, 1).unwrap().scaled(&c).plus(&d.coproduct_at(&w, 1).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decompositions_keep_their_type(t in types(), seed in any::<u64>()) {
        let b = tqft::random_decomposition(t, seed);
        prop_assert_eq!(b.topological_type().unwrap(), Some(t));
    }

    #[test]
    fn tqft_evaluation_is_linear(t in types(), seed in any::<u64>(), c in q(), i in 0usize..27, j in 0usize..27) {
        let d: Dialgebra<Rational> = examples::dual_numbers();
        let b = tqft::random_decomposition(t, seed);
        let inputs = tqft::basis_inputs(&d, t.inputs);
        let (v, w) = (&inputs[i % inputs.len()], &inputs[j % inputs.len()]);
        let lhs = tqft::evaluate(&d, &b, &v.scaled(&c).plus(w)).unwrap();
        let rhs = tqft::evaluate(&d, &b, v).unwrap().scaled(&c).plus(&tqft::evaluate(&d, &b, w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decompositions_agree_on_frobenius_input(t in types(), seed in any::<u64>()) {
        let d: Dialgebra<Rational> = examples::dual_numbers();
        let b = tqft::random_decomposition(t, seed);
        let nf = tqft::normal_form(t);
        for v in tqft::basis_inputs(&d, t.inputs) {
            prop_assert_eq!(tqft::evaluate(&d, &b, &v).unwrap(), tqft::evaluate(&d, &nf, &v).unwrap());
        }
    }

    #[test]
    fn bracket_antisymmetric_on_torus(a in words(SurfaceSymbol::punctured_torus(), 6), b in words(SurfaceSymbol::punctured_torus(), 6)) {
        let s = SurfaceSymbol::punctured_torus();
        prop_assert_eq!(bracket_words::<Rational>(&s, &a, &b), bracket_words::<Rational>(&s, &b, &a).neg());
    }

    #[test]
    fn bracket_antisymmetric_on_pants(a in words(SurfaceSymbol::pants(), 6), b in words(SurfaceSymbol::pants(), 6)) {
        let s = SurfaceSymbol::pants();
        prop_assert_eq!(bracket_words::<Rational>(&s, &a, &b), bracket_words::<Rational>(&s, &b, &a).neg());
    }

    #[test]
    fn erase_after_mark_multiplies_by_length(w in words(SurfaceSymbol::punctured_torus(), 8)) {
        let mut total = FormalSum::<CyclicWord, Rational>::zero();
        for (m, c) in mark_all::<Rational>(&w).iter() {
            total.add_scaled(&erase_mark(m), c);
        }
        prop_assert_eq!(total, FormalSum::term(w.clone(), Rational::from_int(w.len() as i64)));
    }

    #[test]
    fn symbols_satisfy_euler(order in Just(vec!['a', 'A', 'b', 'B', 'c', 'C']).prop_shuffle()) {
        let letters: Vec<Letter> = order.iter().map(|&c| Letter::from_char(c).unwrap()).collect();
        let (g, b) = surface_from_symbol(&letters).unwrap();
        prop_assert_eq!(1 - 3, 2 - 2 * g as i64 - b as i64);
    }

    #[test]
    fn graph_join_associative_and_bilinear(seed in any::<u64>(), c in q()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = suites::random_graph(&mut rng, "g");
        let paths = g.paths_up_to(2);
        let sums: Vec<FormalSum<graph::GraphPath, Rational>> = paths.iter().map(|p| FormalSum::basis(p.clone())).collect();
        let x = sums.iter().fold(FormalSum::zero(), |acc, s| acc.plus(s));
        for y in &sums {
            for z in &sums {
                prop_assert_eq!(graph::join(&graph::join(&x, y), z), graph::join(&x, &graph::join(y, z)));
                prop_assert_eq!(graph::join(&x.scaled(&c).plus(y), z), graph::join(&x, z).scaled(&c).plus(&graph::join(y, z)));
            }
        }
    }

    #[test]
    fn random_dialgebras_round_trip(consts in prop::collection::vec((0usize..3, 0usize..3, 0usize..3, q()), 0..10)) {
        let basis = vec![Symbol::new("u", 0), Symbol::new("v", 0), Symbol::new("w", 0)];
        let names = ["u", "v", "w"];
        let mut d = Dialgebra::<Rational>::new("random", basis).unwrap();
        for (i, j, k, c) in consts {
            if i % 2 == 0 {
                let _ = d.add_product(names[i], names[j], names[k], c.clone());
            }
            let _ = d.add_coproduct(names[k], names[i], names[j], c);
        }
        let text = dtext::serialize(&d);
        let again = dtext::parse::<Rational>(&text).unwrap();
        prop_assert_eq!(dtext::serialize(&again), text);
        prop_assert_eq!(again, d);
    }
}
