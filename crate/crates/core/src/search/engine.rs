//! Backtracking over table cells with watched axiom instances.
//!
//! Cells are numbered `order | mul | imp`, each block `n * n` wide. Every
//! ground axiom instance watches one unassigned cell it depends on; when
//! that cell is assigned the instance is re-evaluated and either passes,
//! fails (prune), or moves its watch to the next unassigned cell it reads.
//! Watch moves are recorded on a trail and undone on backtrack.
//!
//! Forced cells (reflexive diagonal, `x ≼ 1` column, unit rows of `⊙` and
//! the `1 → x` row) get singleton domains and are assigned first, then the
//! order block, then `→` and `⊙`.

use crate::model::{eval, find_tuple, Axiom, AxiomSet, Blocked, Element, FiniteStructure, Interp, Probe, QuasiOrder};

const UNSET: u8 = u8::MAX;

pub(crate) struct Plan {
    n: usize,
    one: Element,
    with_mul: bool,
    strict_link: bool,
    vars: Vec<usize>,
    domains: Vec<Vec<u8>>,
    instances: Vec<(Axiom, [Element; 3])>,
    /// Initial watch lists, or `None` when some instance fails outright.
    initial: Option<Vec<Vec<u32>>>,
}

impl Plan {
    pub(crate) fn new(n: usize, axioms: AxiomSet, strict_link: bool) -> Plan {
        assert!((1..=16).contains(&n), "engine supports orders 1..=16");
        let one = n - 1;
        let with_mul = axioms.needs_mul();
        let cells = 3 * n * n;
        let mut domains: Vec<Vec<u8>> = vec![Vec::new(); cells];
        let full: Vec<u8> = (0..n as u8).collect();
        for i in 0..n {
            for j in 0..n {
                let forced_le = (axioms.contains(Axiom::QoRefl) && i == j)
                    || (axioms.contains(Axiom::Top) && j == one);
                domains[i * n + j] = if forced_le { vec![1] } else { vec![0, 1] };

                domains[n * n + i * n + j] = if !with_mul {
                    vec![0]
                } else if axioms.contains(Axiom::MonUnit) && i == one {
                    vec![j as u8]
                } else if axioms.contains(Axiom::MonUnit) && j == one {
                    vec![i as u8]
                } else {
                    full.clone()
                };

                domains[2 * n * n + i * n + j] = if axioms.contains(Axiom::W1) && i == one {
                    vec![j as u8]
                } else {
                    full.clone()
                };
            }
        }
        let mul_block = n * n..2 * n * n;
        let searched = |c: &usize| with_mul || !mul_block.contains(c);
        let mut vars: Vec<usize> = (0..cells)
            .filter(searched)
            .filter(|&c| domains[c].len() == 1)
            .collect();
        // Order cells first. Under strict LINK the product is interleaved
        // with `→` by largest element so residuation prunes early; under lax
        // LINK the whole `→` table goes before the product.
        let rank = |&c: &usize| {
            let (block, i, j) = (c / (n * n), c % (n * n) / n, c % n);
            let table = match block {
                0 => 0,
                2 => 1,
                _ => 2,
            };
            if strict_link {
                (table.min(1), i.max(j), table, i, j)
            } else {
                (table, i.max(j), 0, i, j)
            }
        };
        let mut free: Vec<usize> = (0..cells)
            .filter(searched)
            .filter(|&c| domains[c].len() > 1)
            .collect();
        free.sort_by_key(rank);
        vars.extend(free);

        let mut instances = Vec::new();
        for axiom in axioms.iter() {
            if axiom.needs_mul() && !with_mul {
                continue;
            }
            find_tuple::<()>(n, axiom.arity(), |t| {
                let mut args = [0; 3];
                args[..t.len()].copy_from_slice(t);
                instances.push((axiom, args));
                None
            });
        }

        let mut plan = Plan {
            n,
            one,
            with_mul,
            strict_link,
            vars,
            domains,
            instances,
            initial: None,
        };
        let empty = vec![UNSET; cells];
        let mut watches = vec![Vec::new(); cells];
        let mut consistent = true;
        for (id, &(axiom, args)) in plan.instances.iter().enumerate() {
            let view = View {
                plan: &plan,
                assign: &empty,
            };
            match eval(axiom, &view, &args[..axiom.arity()], strict_link) {
                Ok(true) => {}
                Ok(false) => consistent = false,
                Err(Blocked(c)) => watches[c].push(id as u32),
            }
        }
        plan.initial = consistent.then_some(watches);
        plan
    }

    pub(crate) fn var_count(&self) -> usize {
        self.vars.len()
    }

    /// Number of leading variables with a single candidate value.
    pub(crate) fn forced_count(&self) -> usize {
        self.vars
            .iter()
            .take_while(|&&c| self.domains[c].len() == 1)
            .count()
    }

    fn build(&self, assign: &[u8]) -> FiniteStructure {
        let n = self.n;
        let order = QuasiOrder::from_flat(n, assign[..n * n].iter().map(|&v| v == 1).collect())
            .expect("order block");
        let mul = self
            .with_mul
            .then(|| assign[n * n..2 * n * n].iter().map(|&v| v as Element).collect());
        let imp = assign[2 * n * n..].iter().map(|&v| v as Element).collect();
        FiniteStructure::from_flat_unchecked(n, self.one, imp, mul, order)
    }
}

struct View<'a> {
    plan: &'a Plan,
    assign: &'a [u8],
}

impl View<'_> {
    #[inline]
    fn cell(&self, c: usize) -> Probe<u8> {
        match self.assign[c] {
            UNSET => Err(Blocked(c)),
            v => Ok(v),
        }
    }
}

impl Interp for View<'_> {
    fn one(&self) -> Element {
        self.plan.one
    }

    fn imp(&self, x: Element, y: Element) -> Probe<Element> {
        let n = self.plan.n;
        self.cell(2 * n * n + x * n + y).map(Element::from)
    }

    fn mul(&self, x: Element, y: Element) -> Probe<Element> {
        let n = self.plan.n;
        self.cell(n * n + x * n + y).map(Element::from)
    }

    fn le(&self, x: Element, y: Element) -> Probe<bool> {
        self.cell(x * self.plan.n + y).map(|v| v == 1)
    }

    /// Negation derived from the unique least element, as on complete
    /// structures; needs the whole order assigned.
    fn neg(&self, x: Element) -> Probe<Option<Element>> {
        let n = self.plan.n;
        if let Some(c) = (0..n * n).find(|&c| self.assign[c] == UNSET) {
            return Err(Blocked(c));
        }
        let least: Vec<Element> = (0..n)
            .filter(|&z| (0..n).all(|y| self.assign[z * n + y] == 1))
            .collect();
        match least.as_slice() {
            [z] => self.imp(x, *z).map(Some),
            _ => Ok(None),
        }
    }
}

pub(crate) enum Flow {
    Continue,
    Stop,
}

pub(crate) struct Engine<'p> {
    plan: &'p Plan,
    assign: Vec<u8>,
    watches: Vec<Vec<u32>>,
    trail: Vec<u32>,
}

impl<'p> Engine<'p> {
    /// `None` when the plan is inconsistent before any assignment.
    pub(crate) fn new(plan: &'p Plan) -> Option<Engine<'p>> {
        let watches = plan.initial.clone()?;
        Some(Engine {
            plan,
            assign: vec![UNSET; plan.domains.len()],
            watches,
            trail: Vec::new(),
        })
    }

    fn propagate(&mut self, cell: usize) -> bool {
        let mut i = 0;
        while i < self.watches[cell].len() {
            let id = self.watches[cell][i] as usize;
            let (axiom, args) = self.plan.instances[id];
            let view = View {
                plan: self.plan,
                assign: &self.assign,
            };
            match eval(axiom, &view, &args[..axiom.arity()], self.plan.strict_link) {
                Ok(true) => {}
                Ok(false) => return false,
                Err(Blocked(c)) => {
                    debug_assert_ne!(c, cell);
                    self.watches[c].push(id as u32);
                    self.trail.push(c as u32);
                }
            }
            i += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize, cell: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().expect("trail entry") as usize;
            self.watches[c].pop();
        }
        self.assign[cell] = UNSET;
    }

    /// Assigns the first `values.len()` variables; `false` if any
    /// assignment is refuted.
    pub(crate) fn replay(&mut self, values: &[u8]) -> bool {
        for (depth, &v) in values.iter().enumerate() {
            let cell = self.plan.vars[depth];
            self.assign[cell] = v;
            if !self.propagate(cell) {
                return false;
            }
        }
        true
    }

    /// Enumerates consistent assignments of variables `depth..stop`,
    /// calling `at_stop` with the values of variables `0..stop`.
    pub(crate) fn explore(
        &mut self,
        depth: usize,
        stop: usize,
        at_stop: &mut dyn FnMut(&[u8], &Plan, &[u8]) -> Flow,
    ) -> Flow {
        if depth == stop {
            let prefix: Vec<u8> = self.plan.vars[..stop].iter().map(|&c| self.assign[c]).collect();
            return at_stop(&prefix, self.plan, &self.assign);
        }
        let plan = self.plan;
        let cell = plan.vars[depth];
        for &v in &plan.domains[cell] {
            self.assign[cell] = v;
            let mark = self.trail.len();
            let ok = self.propagate(cell);
            let flow = if ok {
                self.explore(depth + 1, stop, at_stop)
            } else {
                Flow::Continue
            };
            self.undo(mark, cell);
            if let Flow::Stop = flow {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

/// Materializes a complete assignment.
pub(crate) fn leaf_structure(plan: &Plan, assign: &[u8]) -> FiniteStructure {
    plan.build(assign)
}
