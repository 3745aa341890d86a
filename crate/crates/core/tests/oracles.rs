//! Frozen hand-derived values, checked through the public API only.

use stringtop::dialgebra::{classify, examples, Axiom, Cell, Compatibility, Dialgebra, Structure};
use stringtop::graph::{self, AmbientGraph, Boundary, GraphPath, ObjectLabel, PathChain};
use stringtop::linear::{combine, FormalSum, Symbol, Tensor, TensorSum};
use stringtop::surface::{
    bracket, cobracket, intersection_count, linked, surface_from_symbol, parse_letters, CyclicWord, Linking, Ray,
    SurfaceSymbol,
};
use stringtop::tqft::{self, BordismDag, Kind, Port, TopologicalType};
use stringtop::{Rational, Scalar};

fn r(p: i64, q: i64) -> Rational {
    Rational::from_int(p) / Rational::from_int(q)
}

fn w(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap().unwrap()
}

fn t(d: &Dialgebra<Rational>, names: &[&str]) -> TensorSum<Symbol, Rational> {
    FormalSum::basis(Tensor::new(names.iter().map(|n| d.symbol(n).unwrap()).collect()))
}

#[test]
fn exact_linear_combine() {
    let (x, y) = (Symbol::new("x", 0), Symbol::new("y", 0));
    let v = FormalSum::from_terms([(x.clone(), r(1, 2)), (y.clone(), r(1, 1))]);
    let out = combine(&v, &FormalSum::basis(y.clone()), &r(2, 1), &r(-1, 1)).unwrap();
    assert_eq!(out, FormalSum::from_terms([(x, r(1, 1)), (y, r(1, 1))]));
}

#[test]
fn dual_numbers_structure_constants() {
    let d = examples::dual_numbers::<Rational>();
    let (e, x) = (d.element("e").unwrap(), d.element("x").unwrap());
    assert_eq!(d.multiply(&e, &x).unwrap(), x);
    assert!(d.multiply(&x, &x).unwrap().is_zero());
    assert_eq!(d.comultiply(&e).unwrap(), t(&d, &["e", "x"]).plus(&t(&d, &["x", "e"])));
    assert_eq!(d.comultiply(&x).unwrap(), t(&d, &["x", "x"]));
    assert_eq!(d.product().apply(&t(&d, &["e", "x"])).unwrap(), t(&d, &["x"]));
}

#[test]
fn axiom_checks() {
    let d = examples::dual_numbers::<Rational>();
    assert!(d.check(Axiom::ModuleCompatibility).unwrap().holds);
    let der = d.check(Axiom::DerivationCompatibility).unwrap();
    assert!(!der.holds);
    let wit = der.witness.unwrap();
    assert_eq!(wit.inputs, vec![d.symbol("e").unwrap(), d.symbol("e").unwrap()]);
    let ve = t(&d, &["e", "x"]).plus(&t(&d, &["x", "e"]));
    assert_eq!(wit.lhs, ve);
    assert_eq!(wit.rhs, ve.scaled(&r(2, 1)));

    // mutated: at (x, x) the left side is ∨(0) = 0 and x·(e⊗e) = x⊗e
    let m = examples::mutated_dual_numbers::<Rational>();
    assert!(!m.check(Axiom::ModuleCompatibility).unwrap().holds);
    let x = m.symbol("x").unwrap();
    let sides = m.sides(Axiom::ModuleCompatibility, &[x.clone(), x]).unwrap();
    assert!(sides[0].1.is_zero());
    assert!(sides.iter().any(|(_, v)| *v == t(&m, &["x", "e"])));

    let g = examples::group_like::<Rational>();
    let c = classify(&g).unwrap();
    assert!(c.hopf);
    let der = c.report(Axiom::DerivationCompatibility);
    assert_eq!(der.witness.as_ref().unwrap().inputs, vec![g.symbol("p").unwrap(), g.symbol("p").unwrap()]);
}

#[test]
fn classification_of_dual_numbers() {
    let c = classify(&examples::dual_numbers::<Rational>()).unwrap();
    let want = [
        Cell::new(Structure::Associative, Compatibility::Module),
        Cell::new(Structure::Commutative, Compatibility::Module),
    ];
    assert_eq!(c.cells.into_iter().collect::<Vec<_>>(), want);
}

#[test]
fn surface_topology() {
    let topo = |s: &str| surface_from_symbol(&parse_letters(s).unwrap()).unwrap();
    assert_eq!(topo("abAB"), (1, 1));
    assert_eq!(topo("aAbB"), (0, 3));
    assert_eq!(topo("aA"), (0, 2));
}

#[test]
fn linking_examples() {
    let s = SurfaceSymbol::punctured_torus();
    let (a, b, ab) = (w("a"), w("b"), w("ab"));
    let l = linked(&s, (Ray::forward(&a, 0), Ray::backward(&a, 0)), (Ray::forward(&b, 0), Ray::backward(&b, 0)));
    assert_eq!(l, Linking::Positive);
    let l = linked(&s, (Ray::forward(&ab, 0), Ray::backward(&ab, 0)), (Ray::forward(&ab, 1), Ray::backward(&ab, 1)));
    assert_eq!(l, Linking::Unlinked);
}

#[test]
fn goldman_turaev_values() {
    let s = SurfaceSymbol::punctured_torus();
    let one = |x: &str| FormalSum::<CyclicWord, Rational>::basis(w(x));
    assert_eq!(bracket(&s, &one("a"), &one("b")).unwrap(), one("ab"));
    assert!(bracket(&s, &one("a"), &one("a")).unwrap().is_zero());
    assert!(cobracket(&s, &one("a")).unwrap().is_zero());
    assert!(cobracket(&s, &one("ab")).unwrap().is_zero());
    assert_eq!(intersection_count(&s, &w("a"), &w("b")), 1);
    assert_eq!(intersection_count(&s, &w("a"), &w("a")), 0);
    assert_eq!(intersection_count(&s, &w("ab"), &w("ab")), 0);
}

fn line_graph() -> AmbientGraph {
    let mut g = AmbientGraph::new("oracle");
    for v in ["1", "2", "3", "4", "v"] {
        g.add_vertex(v).unwrap();
    }
    g.add_edge("a", "1", "2").unwrap();
    g.add_edge("b", "2", "3").unwrap();
    g.add_edge("c", "1", "3").unwrap();
    g.add_edge("d", "4", "2").unwrap();
    g.add_edge("l", "v", "v").unwrap();
    g
}

fn lab(vs: &[&str]) -> ObjectLabel {
    ObjectLabel::new(vs.iter().map(|v| v.to_string()))
}

fn path(g: &AmbientGraph, s: &str) -> GraphPath {
    g.parse_path(s).unwrap()
}

fn ps(g: &AmbientGraph, s: &str) -> FormalSum<GraphPath, Rational> {
    FormalSum::basis(path(g, s))
}

fn pair(g: &AmbientGraph, a: &str, b: &str) -> TensorSum<GraphPath, Rational> {
    FormalSum::basis(Tensor::new(vec![path(g, a), path(g, b)]))
}

#[test]
fn open_string_examples() {
    let g = line_graph();
    let pq = PathChain::<Rational>::new(ps(&g, "a").plus(&ps(&g, "d")), lab(&["1", "4"]), lab(&["2"])).unwrap();
    assert_eq!(graph::restrict_start(&pq, &lab(&["4"])).unwrap().sum(), &ps(&g, "d"));

    let x = PathChain::<Rational>::new(ps(&g, "a").plus(&ps(&g, "c")), lab(&["1"]), lab(&["2", "3"])).unwrap();
    let y = PathChain::<Rational>::path(path(&g, "b"), lab(&["2", "3"]), lab(&["3"])).unwrap();
    assert_eq!(graph::compose(&x, &y).unwrap().sum(), &ps(&g, "a.b"));

    let a = PathChain::<Rational>::path(path(&g, "a"), lab(&["1"]), lab(&["2", "3"])).unwrap();
    assert_eq!(graph::compose(&a, &graph::identity(&lab(&["2", "3"]))).unwrap().sum(), a.sum());

    let v = lab(&["v"]);
    assert_eq!(graph::cut_interior(&ps(&g, "l.l.l"), &v), pair(&g, "l", "l.l").plus(&pair(&g, "l.l", "l")));
    assert_eq!(graph::cut_at_index(&ps(&g, "l.l.l"), 2, &v), pair(&g, "l.l", "l"));
    assert_eq!(graph::cut_boundary(&ps(&g, "a"), Boundary::End, &lab(&["2"])), pair(&g, "a", "@2"));
}

fn single(kind: Kind) -> BordismDag {
    let (i, o) = kind.arity();
    let mut b = BordismDag::new(kind.name(), i, o).unwrap();
    b.add_node("g", kind).unwrap();
    for k in 0..i {
        b.add_wire(Port::In(k), Port::NodeIn("g".into(), k)).unwrap();
    }
    for k in 0..o {
        b.add_wire(Port::NodeOut("g".into(), k), Port::Out(k)).unwrap();
    }
    b
}

#[test]
fn tqft_values() {
    let d = examples::dual_numbers::<Rational>();
    assert_eq!(tqft::evaluate(&d, &single(Kind::Pants), &t(&d, &["e", "x"])).unwrap(), t(&d, &["x"]));
    assert_eq!(tqft::evaluate(&d, &single(Kind::Copants), &t(&d, &["e"])).unwrap(), t(&d, &["e", "x"]).plus(&t(&d, &["x", "e"])));

    let h = TopologicalType::new(1, 1, 1).unwrap();
    assert_eq!(tqft::canonical_eval(&d, h, &t(&d, &["e"])).unwrap().value, t(&d, &["x"]).scaled(&r(2, 1)));
    assert!(tqft::canonical_eval(&d, h, &t(&d, &["x"])).unwrap().value.is_zero());
    let m21 = TopologicalType::new(0, 2, 1).unwrap();
    assert_eq!(tqft::canonical_eval(&d, m21, &t(&d, &["e", "e"])).unwrap().value, t(&d, &["e"]));
    let m22 = TopologicalType::new(0, 2, 2).unwrap();
    let want = t(&d, &["e", "x"]).plus(&t(&d, &["x", "e"]));
    for seed in [1, 2] {
        assert_eq!(tqft::evaluate(&d, &tqft::random_decomposition(m22, seed), &t(&d, &["e", "e"])).unwrap(), want);
    }
    assert!(tqft::gate_frobenius(&d).unwrap().iter().all(|r| r.holds));
    assert!(tqft::gate_frobenius(&examples::zero::<Rational>(3)).unwrap().iter().all(|r| r.holds));
}
