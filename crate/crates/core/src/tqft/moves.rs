//! Seeded random decompositions: start from the normal form and apply
//! type-preserving local moves.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dag::{normal_form, BordismDag, Kind, Port, TopologicalType};
use super::Sector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    /// `∧(∧⊗id) → ∧(id⊗∧)`
    AssocRight,
    AssocLeft,
    /// `(∨⊗id)∨ → (id⊗∨)∨`
    CoassocRight,
    CoassocLeft,
    /// `∨∧ → (id⊗∧)(∨⊗id)` or `(∧⊗id)(id⊗∨)`
    FrobeniusOpen,
    /// the reverse
    FrobeniusClose,
    /// `∧ → ∧τ`
    TwistPants,
    /// `∨ → τ∨`
    TwistCopants,
    /// drops a twist by crossing its wires
    TwistSlide,
    CylinderIn,
    CylinderOut,
}

const CLOSED: &[Move] = &[
    Move::AssocRight,
    Move::AssocLeft,
    Move::CoassocRight,
    Move::CoassocLeft,
    Move::FrobeniusOpen,
    Move::FrobeniusClose,
    Move::TwistPants,
    Move::TwistCopants,
    Move::TwistSlide,
    Move::CylinderIn,
    Move::CylinderOut,
];

const OPEN: &[Move] = &[
    Move::AssocRight,
    Move::AssocLeft,
    Move::CoassocRight,
    Move::CoassocLeft,
    Move::FrobeniusOpen,
    Move::FrobeniusClose,
    Move::CylinderIn,
    Move::CylinderOut,
];

pub const MAX_MOVES: usize = 16;

pub fn random_decomposition(t: TopologicalType, seed: u64) -> BordismDag {
    random_decomposition_in(t, seed, Sector::Closed)
}

/// Deterministic in `(t, seed, sector)`. Each of up to [`MAX_MOVES`] steps picks a
/// move and a site uniformly; moves with no site, or that would close a cycle, are skipped.
pub fn random_decomposition_in(t: TopologicalType, seed: u64, sector: Sector) -> BordismDag {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = normal_form(t);
    d.name = format!("random-g{}-m{}-n{}-s{seed}", t.genus, t.inputs, t.outputs);
    let menu = match sector {
        Sector::Closed => CLOSED,
        Sector::Open => OPEN,
    };
    let mut counter = d.nodes.len();
    let steps = rng.gen_range(1..=MAX_MOVES);
    for _ in 0..steps {
        let m = *menu.choose(&mut rng).unwrap();
        let before = d.clone();
        if apply(&mut d, m, &mut rng, &mut counter) && d.validate().is_err() {
            d = before;
        }
    }
    d
}

fn nodes_of(d: &BordismDag, kind: Kind) -> Vec<String> {
    d.nodes.iter().filter(|n| n.kind == kind).map(|n| n.id.clone()).collect()
}

fn src(d: &BordismDag, p: Port) -> Port {
    d.source_of(&p).unwrap().clone()
}

fn dst(d: &BordismDag, p: Port) -> Port {
    d.consumer_of(&p).unwrap()
}

fn ni(id: &str, k: usize) -> Port {
    Port::NodeIn(id.to_string(), k)
}

fn no(id: &str, k: usize) -> Port {
    Port::NodeOut(id.to_string(), k)
}

/// Pairs `(a, b)` of nodes of the given kinds with `a.out.ao` feeding `b.in.bi`.
fn linked(d: &BordismDag, a: Kind, ao: usize, b: Kind, bi: usize) -> Vec<(String, String)> {
    let mut v = vec![];
    for x in nodes_of(d, b) {
        if let Some(Port::NodeOut(y, k)) = d.source_of(&ni(&x, bi)) {
            if *k == ao && d.node(y).map(|n| n.kind) == Some(a) {
                v.push((y.clone(), x));
            }
        }
    }
    v
}

fn apply(d: &mut BordismDag, m: Move, rng: &mut ChaCha8Rng, counter: &mut usize) -> bool {
    use Kind::*;
    match m {
        Move::AssocRight => {
            let Some((p, q)) = linked(d, Pants, 0, Pants, 0).choose(rng).cloned() else { return false };
            let (b, c) = (src(d, ni(&p, 1)), src(d, ni(&q, 1)));
            let a = src(d, ni(&p, 0));
            d.connect(b, ni(&p, 0));
            d.connect(c, ni(&p, 1));
            d.connect(a, ni(&q, 0));
            d.connect(no(&p, 0), ni(&q, 1));
        }
        Move::AssocLeft => {
            let Some((p, q)) = linked(d, Pants, 0, Pants, 1).choose(rng).cloned() else { return false };
            let (a, b, c) = (src(d, ni(&q, 0)), src(d, ni(&p, 0)), src(d, ni(&p, 1)));
            d.connect(a, ni(&p, 0));
            d.connect(b, ni(&p, 1));
            d.connect(no(&p, 0), ni(&q, 0));
            d.connect(c, ni(&q, 1));
        }
        Move::CoassocRight => {
            let Some((p, q)) = linked(d, Copants, 0, Copants, 0).choose(rng).cloned() else { return false };
            let (x, y, z) = (dst(d, no(&q, 0)), dst(d, no(&q, 1)), dst(d, no(&p, 1)));
            d.connect(no(&p, 0), x);
            d.connect(no(&p, 1), ni(&q, 0));
            d.connect(no(&q, 0), y);
            d.connect(no(&q, 1), z);
        }
        Move::CoassocLeft => {
            let Some((p, q)) = linked(d, Copants, 1, Copants, 0).choose(rng).cloned() else { return false };
            let (x, y, z) = (dst(d, no(&p, 0)), dst(d, no(&q, 0)), dst(d, no(&q, 1)));
            d.connect(no(&p, 0), ni(&q, 0));
            d.connect(no(&q, 0), x);
            d.connect(no(&q, 1), y);
            d.connect(no(&p, 1), z);
        }
        Move::FrobeniusOpen => {
            let Some((p, c)) = linked(d, Pants, 0, Copants, 0).choose(rng).cloned() else { return false };
            let (a, b) = (src(d, ni(&p, 0)), src(d, ni(&p, 1)));
            let (x, y) = (dst(d, no(&c, 0)), dst(d, no(&c, 1)));
            if rng.gen_bool(0.5) {
                // (id⊗∧)(∨⊗id)
                d.connect(a, ni(&c, 0));
                d.connect(no(&c, 1), ni(&p, 0));
                d.connect(b, ni(&p, 1));
                d.connect(no(&c, 0), x);
                d.connect(no(&p, 0), y);
            } else {
                // (∧⊗id)(id⊗∨)
                d.connect(b, ni(&c, 0));
                d.connect(a, ni(&p, 0));
                d.connect(no(&c, 0), ni(&p, 1));
                d.connect(no(&p, 0), x);
                d.connect(no(&c, 1), y);
            }
        }
        Move::FrobeniusClose => {
            let mut sites: Vec<(String, String, bool)> =
                linked(d, Copants, 1, Pants, 0).into_iter().map(|(c, p)| (c, p, true)).collect();
            sites.extend(linked(d, Copants, 0, Pants, 1).into_iter().map(|(c, p)| (c, p, false)));
            let Some((c, p, left)) = sites.choose(rng).cloned() else { return false };
            let (a, b, x, y) = if left {
                (src(d, ni(&c, 0)), src(d, ni(&p, 1)), dst(d, no(&c, 0)), dst(d, no(&p, 0)))
            } else {
                (src(d, ni(&p, 0)), src(d, ni(&c, 0)), dst(d, no(&p, 0)), dst(d, no(&c, 1)))
            };
            d.connect(a, ni(&p, 0));
            d.connect(b, ni(&p, 1));
            d.connect(no(&p, 0), ni(&c, 0));
            d.connect(no(&c, 0), x);
            d.connect(no(&c, 1), y);
        }
        Move::TwistPants => {
            let Some(p) = nodes_of(d, Pants).choose(rng).cloned() else { return false };
            let t = d.fresh_id(counter);
            d.add_node(&t, Twist).unwrap();
            let (a, b) = (src(d, ni(&p, 0)), src(d, ni(&p, 1)));
            d.connect(a, ni(&t, 0));
            d.connect(b, ni(&t, 1));
            d.connect(no(&t, 0), ni(&p, 0));
            d.connect(no(&t, 1), ni(&p, 1));
        }
        Move::TwistCopants => {
            let Some(c) = nodes_of(d, Copants).choose(rng).cloned() else { return false };
            let t = d.fresh_id(counter);
            d.add_node(&t, Twist).unwrap();
            let (x, y) = (dst(d, no(&c, 0)), dst(d, no(&c, 1)));
            d.connect(no(&c, 0), ni(&t, 0));
            d.connect(no(&c, 1), ni(&t, 1));
            d.connect(no(&t, 0), x);
            d.connect(no(&t, 1), y);
        }
        Move::TwistSlide => {
            let Some(t) = nodes_of(d, Twist).choose(rng).cloned() else { return false };
            let (a, b) = (src(d, ni(&t, 0)), src(d, ni(&t, 1)));
            let (x, y) = (dst(d, no(&t, 0)), dst(d, no(&t, 1)));
            remove(d, &t);
            d.connect(b, x);
            d.connect(a, y);
        }
        Move::CylinderIn => {
            let dests: Vec<Port> = d.wires.keys().cloned().collect();
            let Some(x) = dests.choose(rng).cloned() else { return false };
            let a = src(d, x.clone());
            let c = d.fresh_id(counter);
            d.add_node(&c, Cylinder).unwrap();
            d.connect(a, ni(&c, 0));
            d.connect(no(&c, 0), x);
        }
        Move::CylinderOut => {
            let Some(c) = nodes_of(d, Cylinder).choose(rng).cloned() else { return false };
            let (a, x) = (src(d, ni(&c, 0)), dst(d, no(&c, 0)));
            remove(d, &c);
            d.connect(a, x);
        }
    }
    true
}

fn remove(d: &mut BordismDag, id: &str) {
    d.wires.retain(|dst, src| {
        let touches = |p: &Port| matches!(p, Port::NodeIn(n, _) | Port::NodeOut(n, _) if n == id);
        !touches(dst) && !touches(src)
    });
    d.remove_node(id);
}
