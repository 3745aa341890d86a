use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::TqftError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Pants,
    Copants,
    Cylinder,
    Twist,
}

impl Kind {
    pub fn arity(self) -> (usize, usize) {
        match self {
            Kind::Pants => (2, 1),
            Kind::Copants => (1, 2),
            Kind::Cylinder => (1, 1),
            Kind::Twist => (2, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Pants => "pants",
            Kind::Copants => "copants",
            Kind::Cylinder => "cylinder",
            Kind::Twist => "twist",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Kind::Pants, Kind::Copants, Kind::Cylinder, Kind::Twist].into_iter().find(|k| k.name() == s)
    }
}

/// A port of the bordism. Indices are 0-based internally and 1-based in text.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    /// Incoming boundary circle `in.k`.
    In(usize),
    /// Outgoing boundary circle `out.k`.
    Out(usize),
    NodeIn(String, usize),
    NodeOut(String, usize),
}

impl Port {
    fn is_source(&self) -> bool {
        matches!(self, Port::In(_) | Port::NodeOut(..))
    }

    pub fn parse(s: &str) -> Option<Self> {
        let parts: Vec<&str> = s.split('.').collect();
        let idx = |t: &str| t.parse::<usize>().ok().filter(|&k| k >= 1).map(|k| k - 1);
        match parts.as_slice() {
            ["in", k] => Some(Port::In(idx(k)?)),
            ["out", k] => Some(Port::Out(idx(k)?)),
            [n, "in", k] if !n.is_empty() => Some(Port::NodeIn(n.to_string(), idx(k)?)),
            [n, "out", k] if !n.is_empty() => Some(Port::NodeOut(n.to_string(), idx(k)?)),
            _ => None,
        }
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Port::In(k) => write!(f, "in.{}", k + 1),
            Port::Out(k) => write!(f, "out.{}", k + 1),
            Port::NodeIn(n, k) => write!(f, "{n}.in.{}", k + 1),
            Port::NodeOut(n, k) => write!(f, "{n}.out.{}", k + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub kind: Kind,
}

/// `(genus, inputs, outputs)` of a connected bordism with nonempty ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopologicalType {
    pub genus: usize,
    pub inputs: usize,
    pub outputs: usize,
}

impl TopologicalType {
    pub fn new(genus: usize, inputs: usize, outputs: usize) -> Result<Self, TqftError> {
        if inputs == 0 || outputs == 0 {
            return Err(TqftError::EmptyBoundary);
        }
        Ok(Self { genus, inputs, outputs })
    }
}

impl fmt::Display for TopologicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, m={}, n={})", self.genus, self.inputs, self.outputs)
    }
}

/// A bordism as an acyclic wiring of generators. Each destination port
/// (`out.k`, `<node>.in.k`) is fed by exactly one source port
/// (`in.k`, `<node>.out.k`), and every source is used exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BordismDag {
    pub(crate) name: String,
    pub(crate) inputs: usize,
    pub(crate) outputs: usize,
    pub(crate) nodes: Vec<Node>,
    /// destination → source
    pub(crate) wires: BTreeMap<Port, Port>,
}

impl BordismDag {
    pub fn new(name: impl Into<String>, inputs: usize, outputs: usize) -> Result<Self, TqftError> {
        if inputs == 0 || outputs == 0 {
            return Err(TqftError::EmptyBoundary);
        }
        Ok(Self { name: name.into(), inputs, outputs, nodes: vec![], wires: BTreeMap::new() })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Wires as `(source, destination)` in canonical (destination) order.
    pub fn wires(&self) -> impl Iterator<Item = (&Port, &Port)> {
        self.wires.iter().map(|(d, s)| (s, d))
    }

    pub fn add_node(&mut self, id: &str, kind: Kind) -> Result<(), TqftError> {
        if id.is_empty() || id.contains('.') || self.nodes.iter().any(|n| n.id == id) {
            return Err(TqftError::BadNode(id.to_string()));
        }
        self.nodes.push(Node { id: id.to_string(), kind });
        Ok(())
    }

    pub fn add_wire(&mut self, src: Port, dst: Port) -> Result<(), TqftError> {
        if !src.is_source() || dst.is_source() {
            return Err(TqftError::WireDirection(src.to_string(), dst.to_string()));
        }
        if self.wires.contains_key(&dst) {
            return Err(TqftError::PortReused(dst.to_string()));
        }
        self.wires.insert(dst, src);
        Ok(())
    }

    pub(crate) fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub(crate) fn source_of(&self, dst: &Port) -> Option<&Port> {
        self.wires.get(dst)
    }

    fn all_sources(&self) -> Vec<Port> {
        let mut v: Vec<Port> = (0..self.inputs).map(Port::In).collect();
        for n in &self.nodes {
            v.extend((0..n.kind.arity().1).map(|k| Port::NodeOut(n.id.clone(), k)));
        }
        v
    }

    fn all_destinations(&self) -> Vec<Port> {
        let mut v: Vec<Port> = (0..self.outputs).map(Port::Out).collect();
        for n in &self.nodes {
            v.extend((0..n.kind.arity().0).map(|k| Port::NodeIn(n.id.clone(), k)));
        }
        v
    }

    /// Checks port arities, exactly-once wiring and acyclicity; returns a topological order of node indices.
    pub fn validate(&self) -> Result<Vec<usize>, TqftError> {
        if self.inputs == 0 || self.outputs == 0 {
            return Err(TqftError::EmptyBoundary);
        }
        let sources: BTreeSet<Port> = self.all_sources().into_iter().collect();
        let dests: BTreeSet<Port> = self.all_destinations().into_iter().collect();
        let mut used = BTreeSet::new();
        for (d, s) in &self.wires {
            if !dests.contains(d) {
                return Err(TqftError::UnknownPort(d.to_string()));
            }
            if !sources.contains(s) {
                return Err(TqftError::UnknownPort(s.to_string()));
            }
            if !used.insert(s.clone()) {
                return Err(TqftError::PortReused(s.to_string()));
            }
        }
        if let Some(d) = dests.iter().find(|d| !self.wires.contains_key(*d)) {
            return Err(TqftError::Dangling(d.to_string()));
        }
        if let Some(s) = sources.iter().find(|s| !used.contains(*s)) {
            return Err(TqftError::Dangling(s.to_string()));
        }
        self.topological_order()
    }

    /// Kahn's algorithm; ties broken by declaration order so evaluation is deterministic.
    fn topological_order(&self) -> Result<Vec<usize>, TqftError> {
        let index: BTreeMap<&str, usize> = self.nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();
        let mut indeg = vec![0usize; self.nodes.len()];
        let mut succ: Vec<Vec<usize>> = vec![vec![]; self.nodes.len()];
        for (d, s) in &self.wires {
            if let (Port::NodeIn(dn, _), Port::NodeOut(sn, _)) = (d, s) {
                let (di, si) = (index[dn.as_str()], index[sn.as_str()]);
                indeg[di] += 1;
                succ[si].push(di);
            }
        }
        let mut ready: BTreeSet<usize> = (0..self.nodes.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if order.len() != self.nodes.len() {
            return Err(TqftError::Cycle);
        }
        Ok(order)
    }

    /// Genus from the Euler characteristic `χ = -(#pants + #copants)` when the
    /// bordism is connected; `None` otherwise.
    pub fn topological_type(&self) -> Result<Option<TopologicalType>, TqftError> {
        self.validate()?;
        // Surface pieces: one per pants/copants/cylinder, two per twist (its two strands),
        // plus one per boundary-to-boundary wire.
        let mut piece_of: BTreeMap<Port, usize> = BTreeMap::new();
        let mut pieces = 0;
        for n in &self.nodes {
            match n.kind {
                Kind::Twist => {
                    piece_of.insert(Port::NodeIn(n.id.clone(), 0), pieces);
                    piece_of.insert(Port::NodeOut(n.id.clone(), 1), pieces);
                    piece_of.insert(Port::NodeIn(n.id.clone(), 1), pieces + 1);
                    piece_of.insert(Port::NodeOut(n.id.clone(), 0), pieces + 1);
                    pieces += 2;
                }
                k => {
                    let (i, o) = k.arity();
                    for p in 0..i {
                        piece_of.insert(Port::NodeIn(n.id.clone(), p), pieces);
                    }
                    for p in 0..o {
                        piece_of.insert(Port::NodeOut(n.id.clone(), p), pieces);
                    }
                    pieces += 1;
                }
            }
        }
        let mut parent: Vec<usize> = (0..pieces).collect();
        let mut direct = 0;
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (d, s) in &self.wires {
            match (piece_of.get(d), piece_of.get(s)) {
                (Some(&a), Some(&b)) => {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
                (None, None) => direct += 1,
                _ => {}
            }
        }
        let roots: BTreeSet<usize> = (0..pieces).map(|x| find(&mut parent, x)).collect();
        if roots.len() + direct != 1 {
            return Ok(None);
        }
        let saddles = self.nodes.iter().filter(|n| matches!(n.kind, Kind::Pants | Kind::Copants)).count() as i64;
        let twice_g = 2 - (self.inputs + self.outputs) as i64 + saddles;
        debug_assert!(twice_g >= 0 && twice_g % 2 == 0);
        Ok(Some(TopologicalType { genus: (twice_g / 2) as usize, inputs: self.inputs, outputs: self.outputs }))
    }

    pub(crate) fn fresh_id(&self, counter: &mut usize) -> String {
        loop {
            *counter += 1;
            let id = format!("n{counter}");
            if self.node(&id).is_none() {
                return id;
            }
        }
    }

    pub(crate) fn remove_node(&mut self, id: &str) {
        self.nodes.retain(|n| n.id != id);
    }

    /// Redirects whatever feeds `dst` to `src` (overwriting).
    pub(crate) fn connect(&mut self, src: Port, dst: Port) {
        self.wires.insert(dst, src);
    }

    pub(crate) fn consumer_of(&self, src: &Port) -> Option<Port> {
        self.wires.iter().find(|(_, s)| *s == src).map(|(d, _)| d.clone())
    }
}

/// Normal form for a connected bordism: fold the inputs with pants, add `genus`
/// handles (copants then pants), unfold with copants applied to the last factor.
pub fn normal_form(t: TopologicalType) -> BordismDag {
    let mut d = BordismDag::new(format!("normal-g{}-m{}-n{}", t.genus, t.inputs, t.outputs), t.inputs, t.outputs).unwrap();
    let mut counter = 0;
    let mut id = |d: &BordismDag, kind: Kind| {
        let n = d.fresh_id(&mut counter);
        (n, kind)
    };
    if t.genus == 0 && t.inputs == 1 && t.outputs == 1 {
        let (n, k) = id(&d, Kind::Cylinder);
        d.add_node(&n, k).unwrap();
        d.add_wire(Port::In(0), Port::NodeIn(n.clone(), 0)).unwrap();
        d.add_wire(Port::NodeOut(n, 0), Port::Out(0)).unwrap();
        return d;
    }
    let mut current = Port::In(0);
    for k in 1..t.inputs {
        let (n, kind) = id(&d, Kind::Pants);
        d.add_node(&n, kind).unwrap();
        d.add_wire(current, Port::NodeIn(n.clone(), 0)).unwrap();
        d.add_wire(Port::In(k), Port::NodeIn(n.clone(), 1)).unwrap();
        current = Port::NodeOut(n, 0);
    }
    for _ in 0..t.genus {
        let (c, kc) = id(&d, Kind::Copants);
        d.add_node(&c, kc).unwrap();
        let (p, kp) = id(&d, Kind::Pants);
        d.add_node(&p, kp).unwrap();
        d.add_wire(current, Port::NodeIn(c.clone(), 0)).unwrap();
        d.add_wire(Port::NodeOut(c.clone(), 0), Port::NodeIn(p.clone(), 0)).unwrap();
        d.add_wire(Port::NodeOut(c, 1), Port::NodeIn(p.clone(), 1)).unwrap();
        current = Port::NodeOut(p, 0);
    }
    for j in 0..t.outputs - 1 {
        let (c, kc) = id(&d, Kind::Copants);
        d.add_node(&c, kc).unwrap();
        d.add_wire(current, Port::NodeIn(c.clone(), 0)).unwrap();
        d.add_wire(Port::NodeOut(c.clone(), 0), Port::Out(j)).unwrap();
        current = Port::NodeOut(c, 1);
    }
    d.add_wire(current, Port::Out(t.outputs - 1)).unwrap();
    d
}
