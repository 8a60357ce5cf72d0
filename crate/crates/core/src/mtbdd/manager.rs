use std::collections::{HashMap, HashSet};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use super::{AbstractionRequest, DdError, Node, NodeId, OpId, Policy};
use crate::algebra::{Magma, MedialCertificate, Real};
use crate::gsf::{Assignment, TruthTable, MAX_VARS};

/// Level of a terminal: below every variable.
const TERMINAL_LEVEL: usize = usize::MAX;

struct RegisteredOp<V> {
    magma: Box<dyn Magma<Value = V>>,
    certificate: Option<MedialCertificate<V>>,
}

/// Node store, unique table and operation caches for diagrams over `V`.
///
/// The manager only grows; nodes are never freed.
pub struct Manager<V> {
    vars: usize,
    nodes: Vec<Node<V>>,
    unique: HashMap<(usize, NodeId, NodeId), NodeId>,
    terminals: HashMap<V, NodeId>,
    ops: Vec<RegisteredOp<V>>,
    apply_cache: HashMap<(OpId, NodeId, NodeId), NodeId>,
    abstract_cache: HashMap<(OpId, usize, NodeId), NodeId>,
}

type Result<T, V> = std::result::Result<T, DdError<V>>;

impl<V> Manager<V>
where
    V: Clone + Eq + Hash + Debug,
{
    /// A manager for functions of `vars` variables, `1..=20`.
    pub fn new(vars: usize) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&vars),
            "variable count must be 1..={MAX_VARS}"
        );
        Manager {
            vars,
            nodes: Vec::new(),
            unique: HashMap::new(),
            terminals: HashMap::new(),
            ops: Vec::new(),
            apply_cache: HashMap::new(),
            abstract_cache: HashMap::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    /// Total nodes ever created.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn register_op(&mut self, magma: impl Magma<Value = V> + 'static) -> OpId {
        self.ops.push(RegisteredOp {
            magma: Box::new(magma),
            certificate: None,
        });
        OpId(self.ops.len() as u32 - 1)
    }

    fn registered(&self, op: OpId) -> Result<&RegisteredOp<V>, V> {
        self.ops.get(op.0 as usize).ok_or(DdError::UnknownOp(op))
    }

    pub fn op(&self, op: OpId) -> Result<&dyn Magma<Value = V>, V> {
        Ok(self.registered(op)?.magma.as_ref())
    }

    /// The operation's medial certificate, computed once per operation.
    pub fn medial_certificate(&mut self, op: OpId) -> Result<&MedialCertificate<V>, V> {
        self.registered(op)?;
        let entry = &mut self.ops[op.0 as usize];
        if entry.certificate.is_none() {
            entry.certificate = Some(entry.magma.medial_certificate());
        }
        Ok(entry.certificate.as_ref().unwrap())
    }

    fn push(&mut self, node: Node<V>) -> NodeId {
        let id = NodeId(u32::try_from(self.nodes.len()).expect("node store overflow"));
        self.nodes.push(node);
        id
    }

    /// The canonical terminal for `value`; equal values share one id.
    pub fn mk_terminal(&mut self, value: V) -> NodeId {
        if let Some(&id) = self.terminals.get(&value) {
            return id;
        }
        let id = self.push(Node::Terminal(value.clone()));
        self.terminals.insert(value, id);
        id
    }

    pub fn node(&self, id: NodeId) -> Result<&Node<V>, V> {
        self.nodes.get(id.index()).ok_or(DdError::UnknownNode(id))
    }

    fn level(&self, id: NodeId) -> usize {
        match self.nodes[id.index()] {
            Node::Terminal(_) => TERMINAL_LEVEL,
            Node::Internal { var, .. } => var,
        }
    }

    /// Tested variable of `id`, `None` for terminals.
    pub fn var_of(&self, id: NodeId) -> Result<Option<usize>, V> {
        Ok(match self.node(id)? {
            Node::Terminal(_) => None,
            Node::Internal { var, .. } => Some(*var),
        })
    }

    pub fn terminal_value(&self, id: NodeId) -> Option<&V> {
        match self.nodes.get(id.index())? {
            Node::Terminal(v) => Some(v),
            Node::Internal { .. } => None,
        }
    }

    fn check_var(&self, var: usize) -> Result<(), V> {
        if var == 0 || var > self.vars {
            Err(DdError::VariableOutOfRange { var, n: self.vars })
        } else {
            Ok(())
        }
    }

    /// Interns an internal node, applying the reduction rule `low == high`.
    pub fn mk_node(&mut self, var: usize, low: NodeId, high: NodeId) -> Result<NodeId, V> {
        self.check_var(var)?;
        self.node(low)?;
        self.node(high)?;
        let (low_level, high_level) = (self.level(low), self.level(high));
        if var >= low_level || var >= high_level {
            return Err(DdError::Ordering {
                var,
                low_level,
                high_level,
            });
        }
        Ok(self.mk(var, low, high))
    }

    fn mk(&mut self, var: usize, low: NodeId, high: NodeId) -> NodeId {
        if low == high {
            return low;
        }
        debug_assert!(var < self.level(low) && var < self.level(high));
        if let Some(&id) = self.unique.get(&(var, low, high)) {
            return id;
        }
        let id = self.push(Node::Internal { var, low, high });
        self.unique.insert((var, low, high), id);
        id
    }

    fn cofactors(&self, id: NodeId, var: usize) -> (NodeId, NodeId) {
        match self.nodes[id.index()] {
            Node::Internal { var: v, low, high } if v == var => (low, high),
            _ => (id, id),
        }
    }

    pub fn from_truth_table(&mut self, f: &TruthTable<V>) -> Result<NodeId, V> {
        if f.n() != self.vars {
            return Err(DdError::Arity {
                expected: self.vars,
                got: f.n(),
            });
        }
        Ok(self.build(1, f.values()))
    }

    fn build(&mut self, var: usize, values: &[V]) -> NodeId {
        if values.len() == 1 {
            return self.mk_terminal(values[0].clone());
        }
        let (lo, hi) = values.split_at(values.len() / 2);
        let low = self.build(var + 1, lo);
        let high = self.build(var + 1, hi);
        self.mk(var, low, high)
    }

    pub fn eval(&self, node: NodeId, b: &Assignment) -> Result<&V, V> {
        if b.len() != self.vars {
            return Err(DdError::Arity {
                expected: self.vars,
                got: b.len(),
            });
        }
        let mut id = node;
        loop {
            match self.node(id)? {
                Node::Terminal(v) => return Ok(v),
                Node::Internal { var, low, high } => {
                    id = if b.bit(*var) { *high } else { *low };
                }
            }
        }
    }

    /// Expands a diagram into its dense table over all `n` variables.
    pub fn to_truth_table(&self, node: NodeId) -> Result<TruthTable<V>, V> {
        self.node(node)?;
        let n = self.vars;
        let mut values = Vec::with_capacity(1 << n);
        for row in 0..1usize << n {
            let b = Assignment::from_index(n, row);
            let mut id = node;
            let v = loop {
                match &self.nodes[id.index()] {
                    Node::Terminal(v) => break v.clone(),
                    Node::Internal { var, low, high } => {
                        id = if b.bit(*var) { *high } else { *low };
                    }
                }
            };
            values.push(v);
        }
        Ok(TruthTable::new(n, values).expect("2^n values"))
    }

    /// The cofactor with variable `i` fixed to `bit`.
    pub fn restrict(&mut self, node: NodeId, i: usize, bit: bool) -> Result<NodeId, V> {
        self.check_var(i)?;
        self.node(node)?;
        let mut memo = HashMap::new();
        Ok(self.restrict_rec(node, i, bit, &mut memo))
    }

    fn restrict_rec(
        &mut self,
        node: NodeId,
        i: usize,
        bit: bool,
        memo: &mut HashMap<NodeId, NodeId>,
    ) -> NodeId {
        let Node::Internal { var, low, high } = self.nodes[node.index()] else {
            return node;
        };
        if var > i {
            return node;
        }
        if var == i {
            return if bit { high } else { low };
        }
        if let Some(&r) = memo.get(&node) {
            return r;
        }
        let l = self.restrict_rec(low, i, bit, memo);
        let h = self.restrict_rec(high, i, bit, memo);
        let r = self.mk(var, l, h);
        memo.insert(node, r);
        r
    }

    /// Pointwise `u * v`.
    pub fn apply(&mut self, op: OpId, u: NodeId, v: NodeId) -> Result<NodeId, V> {
        self.registered(op)?;
        self.node(u)?;
        self.node(v)?;
        self.apply_rec(op, u, v)
    }

    fn apply_rec(&mut self, op: OpId, u: NodeId, v: NodeId) -> Result<NodeId, V> {
        if let Some(&r) = self.apply_cache.get(&(op, u, v)) {
            return Ok(r);
        }
        let r = match (&self.nodes[u.index()], &self.nodes[v.index()]) {
            (Node::Terminal(a), Node::Terminal(b)) => {
                let value = self.ops[op.0 as usize].magma.op(a, b)?;
                self.mk_terminal(value)
            }
            _ => {
                let top = self.level(u).min(self.level(v));
                let (u0, u1) = self.cofactors(u, top);
                let (v0, v1) = self.cofactors(v, top);
                let low = self.apply_rec(op, u0, v0)?;
                let high = self.apply_rec(op, u1, v1)?;
                self.mk(top, low, high)
            }
        };
        self.apply_cache.insert((op, u, v), r);
        Ok(r)
    }

    /// `f|_{x_i=0} * f|_{x_i=1}`; variable `i` no longer occurs in the result.
    pub fn abstract_var(&mut self, op: OpId, i: usize, node: NodeId) -> Result<NodeId, V> {
        self.registered(op)?;
        self.check_var(i)?;
        self.node(node)?;
        self.abstract_rec(op, i, node)
    }

    fn abstract_rec(&mut self, op: OpId, i: usize, node: NodeId) -> Result<NodeId, V> {
        if let Some(&r) = self.abstract_cache.get(&(op, i, node)) {
            return Ok(r);
        }
        let r = match self.nodes[node.index()] {
            Node::Internal { var, low, high } if var < i => {
                let l = self.abstract_rec(op, i, low)?;
                let h = self.abstract_rec(op, i, high)?;
                self.mk(var, l, h)
            }
            Node::Internal { var, low, high } if var == i => self.apply_rec(op, low, high)?,
            // variable i does not occur below this node
            _ => self.apply_rec(op, node, node)?,
        };
        self.abstract_cache.insert((op, i, node), r);
        Ok(r)
    }

    /// Abstracts `vars` one after another, first element first.
    pub fn abstract_in_order(
        &mut self,
        op: OpId,
        vars: &[usize],
        node: NodeId,
    ) -> Result<NodeId, V> {
        let mut r = node;
        for &i in vars {
            r = self.abstract_var(op, i, r)?;
        }
        Ok(r)
    }

    /// Abstracts a set of variables.
    ///
    /// Under [`Policy::Gated`], more than one variable requires the operation
    /// to be medial, otherwise the result could depend on the order and the
    /// request is refused with the operation's witness. Certified requests run
    /// in ascending variable order. [`Policy::ForcedOrder`] runs in the given
    /// order unconditionally.
    pub fn abstract_set(&mut self, req: &AbstractionRequest, node: NodeId) -> Result<NodeId, V> {
        self.registered(req.op)?;
        self.node(node)?;
        for (k, &v) in req.vars.iter().enumerate() {
            self.check_var(v)?;
            if req.vars[..k].contains(&v) {
                return Err(DdError::DuplicateVariable(v));
            }
        }
        match req.policy {
            Policy::ForcedOrder => self.abstract_in_order(req.op, &req.vars, node),
            Policy::Gated => {
                if req.vars.len() > 1 {
                    if let MedialCertificate::Refuted(witness) = self.medial_certificate(req.op)? {
                        let witness = witness.clone();
                        return Err(DdError::NotWellDefined {
                            op: self.ops[req.op.0 as usize].magma.name().to_string(),
                            vars: req.vars.clone(),
                            witness,
                        });
                    }
                }
                let mut vars = req.vars.clone();
                vars.sort_unstable();
                self.abstract_in_order(req.op, &vars, node)
            }
        }
    }

    fn reachable(&self, root: NodeId) -> Vec<NodeId> {
        let mut seen = HashSet::new();
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            if !seen.insert(id) {
                continue;
            }
            if let Node::Internal { low, high, .. } = self.nodes[id.index()] {
                stack.push(low);
                stack.push(high);
            }
        }
        let mut ids: Vec<NodeId> = seen.into_iter().collect();
        ids.sort_unstable();
        ids
    }

    /// Distinct nodes reachable from `node`, terminals included.
    pub fn node_count(&self, node: NodeId) -> Result<usize, V> {
        self.node(node)?;
        Ok(self.reachable(node).len())
    }

    /// Variables tested anywhere below `node`, ascending.
    pub fn support(&self, node: NodeId) -> Result<Vec<usize>, V> {
        self.node(node)?;
        let mut vars: Vec<usize> = self
            .reachable(node)
            .into_iter()
            .filter_map(|id| match self.nodes[id.index()] {
                Node::Internal { var, .. } => Some(var),
                Node::Terminal(_) => None,
            })
            .collect();
        vars.sort_unstable();
        vars.dedup();
        Ok(vars)
    }

    /// Text dump of the reachable nodes in ascending id order (children always
    /// have smaller ids than their parents):
    ///
    /// ```text
    /// node 0 = terminal a
    /// node 2 = var 2 ? 1 : 0
    /// ```
    pub fn dump_with(
        &self,
        node: NodeId,
        mut fmt_value: impl FnMut(&V) -> String,
    ) -> Result<String, V> {
        self.node(node)?;
        let mut out = String::new();
        for id in self.reachable(node) {
            match &self.nodes[id.index()] {
                Node::Terminal(v) => {
                    out.push_str(&format!("node {id} = terminal {}\n", fmt_value(v)))
                }
                Node::Internal { var, low, high } => {
                    out.push_str(&format!("node {id} = var {var} ? {high} : {low}\n"))
                }
            }
        }
        Ok(out)
    }

    pub fn dump(&self, node: NodeId) -> Result<String, V>
    where
        V: Display,
    {
        self.dump_with(node, |v| v.to_string())
    }

    /// Checks ordering, reduction and uniqueness of everything below `node`.
    pub fn audit(&self, node: NodeId) -> Result<(), V> {
        self.node(node)?;
        let bad = |node: NodeId, detail: String| Err(DdError::Structure { node, detail });
        for id in self.reachable(node) {
            match &self.nodes[id.index()] {
                Node::Terminal(v) => {
                    if self.terminals.get(v) != Some(&id) {
                        return bad(id, "terminal is not the interned copy".into());
                    }
                }
                Node::Internal { var, low, high } => {
                    if *var == 0 || *var > self.vars {
                        return bad(id, format!("variable {var} out of range"));
                    }
                    if low == high {
                        return bad(id, "redundant test".into());
                    }
                    if *var >= self.level(*low) || *var >= self.level(*high) {
                        return bad(id, "children do not follow the variable order".into());
                    }
                    if self.unique.get(&(*var, *low, *high)) != Some(&id) {
                        return bad(id, "node is not the interned copy".into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Drops the apply and abstraction caches. Results are unaffected.
    pub fn clear_caches(&mut self) {
        self.apply_cache.clear();
        self.abstract_cache.clear();
    }
}

impl Manager<Real> {
    /// Terminal for a double; rejects NaN and folds `-0.0` into `0.0`.
    pub fn mk_real(&mut self, x: f64) -> Result<NodeId, Real> {
        Ok(self.mk_terminal(Real::new(x)?))
    }
}
