use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::mvec::{axpy, cmp_pos, MVec, Term};
use crate::algebra::{Field, Monomial};
use crate::error::{MfError, Result};

/// A basis element together with its cofactor expression ("tail") in terms
/// of the input generators. Tails are empty when tracking is off.
#[derive(Clone, Debug)]
pub(crate) struct Element<F: Field> {
    pub vec: MVec<F>,
    pub tail: MVec<F>,
}

impl<F: Field> Element<F> {
    fn lead(&self) -> &Term<F> {
        self.vec.lead().expect("basis elements are nonzero")
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
}

/// Buchberger's algorithm with the Gebauer–Möller criteria and the normal
/// selection strategy, optionally tracking cofactors.
pub(crate) struct Engine<F: Field> {
    field: F,
    cap: u32,
    track: bool,
    product_criterion: bool,
    elems: Vec<Element<F>>,
    active: Vec<bool>,
    by_comp: BTreeMap<u32, Vec<usize>>,
    pairs: Vec<Pair>,
    syz: Vec<MVec<F>>,
}

impl<F: Field> Engine<F> {
    /// The product criterion is only sound for ideals without cofactor
    /// tracking, so callers enable it explicitly.
    pub fn new(field: &F, cap: u32, track: bool, product_criterion: bool) -> Self {
        Engine {
            field: field.clone(),
            cap,
            track,
            product_criterion: product_criterion && !track,
            elems: Vec::new(),
            active: Vec::new(),
            by_comp: BTreeMap::new(),
            pairs: Vec::new(),
            syz: Vec::new(),
        }
    }

    fn find_reducer(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp
            .get(&comp)?
            .iter()
            .copied()
            .find(|&g| self.elems[g].lead().mon.divides(mon))
    }

    /// Full reduction of `v` by the active basis, carrying the tail along.
    pub fn reduce(&self, v: MVec<F>, mut tail: MVec<F>) -> (MVec<F>, MVec<F>) {
        let k = &self.field;
        let mut p = v.terms;
        let mut rem: Vec<Term<F>> = Vec::new();
        let mut i = 0;
        while i < p.len() {
            match self.find_reducer(&p[i].mon, p[i].comp) {
                Some(g) => {
                    let ge = &self.elems[g];
                    let q = ge.lead().mon.quotient(&p[i].mon).expect("divides");
                    let c = k.neg(&p[i].coeff);
                    if self.track {
                        tail = tail.add_mul(k, &ge.tail, &q, &c);
                    }
                    p = axpy(k, &p[i..], &ge.vec.terms, &q, &c);
                    i = 0;
                }
                None => {
                    rem.push(p[i].clone());
                    i += 1;
                }
            }
        }
        (MVec { terms: rem }, tail)
    }

    /// Adds an input generator: reduce it, then record a syzygy or insert.
    pub fn add_generator(&mut self, v: MVec<F>, tail: MVec<F>) -> Result<()> {
        let (r, t) = self.reduce(v, tail);
        if r.is_zero() {
            if self.track && !t.is_zero() {
                self.syz.push(t);
            }
            Ok(())
        } else {
            self.insert(r, t)
        }
    }

    /// Seeds the engine with elements already forming a reduced Gröbner
    /// basis; no pairs among them are formed.
    pub fn seed_basis(&mut self, elems: Vec<(MVec<F>, MVec<F>)>) {
        for (vec, tail) in elems {
            let idx = self.elems.len();
            let comp = vec.lead().expect("nonzero").comp;
            self.elems.push(Element { vec, tail });
            self.active.push(true);
            self.by_comp.entry(comp).or_default().push(idx);
        }
    }

    fn insert(&mut self, vec: MVec<F>, tail: MVec<F>) -> Result<()> {
        let k = &self.field;
        let lead = vec.lead().expect("nonzero");
        let degree = lead.mon.degree();
        if degree > self.cap {
            return Err(MfError::DegreeGuardExceeded {
                degree,
                cap: self.cap,
            });
        }
        let inv = k.inv(&lead.coeff).expect("nonzero");
        let vec = vec.scale(k, &inv);
        let tail = if self.track {
            tail.scale(k, &inv)
        } else {
            tail
        };
        let h = self.elems.len();
        self.elems.push(Element { vec, tail });
        self.active.push(true);
        self.update(h);
        let comp = self.elems[h].lead().comp;
        self.by_comp.entry(comp).or_default().push(h);
        Ok(())
    }

    fn update(&mut self, h: usize) {
        let hm = self.elems[h].lead().mon.clone();
        let hc = self.elems[h].lead().comp;

        let mut cands: Vec<(Pair, bool)> = self
            .by_comp
            .get(&hc)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
            .iter()
            .map(|&g| {
                let gm = &self.elems[g].lead().mon;
                (
                    Pair {
                        i: g,
                        j: h,
                        lcm: gm.lcm(&hm),
                        comp: hc,
                    },
                    gm.is_coprime(&hm),
                )
            })
            .collect();

        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while let Some((p, coprime)) = cands.pop() {
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(q, _)| q.lcm.divides(&p.lcm));
            if (self.product_criterion && coprime) || !dominated {
                kept.push((p, coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, coprime)| !(self.product_criterion && *coprime))
            .map(|(p, _)| p)
            .collect();

        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().mon.lcm(&hm);
            let lj = elems[p.j].lead().mon.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        if let Some(list) = self.by_comp.get_mut(&hc) {
            let elems = &self.elems;
            let active = &mut self.active;
            list.retain(|&g| {
                if hm.divides(&elems[g].lead().mon) {
                    active[g] = false;
                    false
                } else {
                    true
                }
            });
        }
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (idx, p) in self.pairs.iter().enumerate() {
            best = match best {
                None => Some(idx),
                Some(b) => {
                    let q = &self.pairs[b];
                    let ord =
                        cmp_pos(&p.lcm, p.comp, &q.lcm, q.comp).then((p.j, p.i).cmp(&(q.j, q.i)));
                    if ord == Ordering::Less {
                        Some(idx)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn s_vector(&self, p: &Pair) -> (MVec<F>, MVec<F>) {
        let k = &self.field;
        let (gi, gj) = (&self.elems[p.i], &self.elems[p.j]);
        let mi = gi.lead().mon.quotient(&p.lcm).expect("divides");
        let mj = gj.lead().mon.quotient(&p.lcm).expect("divides");
        let one = k.one();
        let mone = k.neg(&one);
        let s = axpy(
            k,
            &axpy(k, &[], &gi.vec.terms, &mi, &one),
            &gj.vec.terms,
            &mj,
            &mone,
        );
        let t = if self.track {
            MVec::zero()
                .add_mul(k, &gi.tail, &mi, &one)
                .add_mul(k, &gj.tail, &mj, &mone)
        } else {
            MVec::zero()
        };
        (MVec { terms: s }, t)
    }

    /// Processes pairs until none remain.
    pub fn run(&mut self) -> Result<()> {
        while let Some(idx) = self.select() {
            let pair = self.pairs.swap_remove(idx);
            let (s, t) = self.s_vector(&pair);
            let (r, t) = self.reduce(s, t);
            if r.is_zero() {
                if self.track && !t.is_zero() {
                    self.syz.push(t);
                }
            } else {
                self.insert(r, t)?;
            }
        }
        Ok(())
    }

    /// The reduced basis (sorted by increasing leading term) and the
    /// syzygy tails collected from zero reductions.
    pub fn finish(self) -> (Vec<Element<F>>, Vec<MVec<F>>) {
        let mut out: Vec<Element<F>> = Vec::new();
        for list in self.by_comp.values() {
            for &g in list {
                let e = &self.elems[g];
                let lead = e.lead().clone();
                let rest = MVec {
                    terms: e.vec.terms[1..].to_vec(),
                };
                let (r, t) = self.reduce(rest, e.tail.clone());
                let mut terms = Vec::with_capacity(r.len() + 1);
                terms.push(lead);
                terms.extend(r.terms);
                out.push(Element {
                    vec: MVec { terms },
                    tail: t,
                });
            }
        }
        out.sort_by(|a, b| {
            let (la, lb) = (a.lead(), b.lead());
            cmp_pos(&la.mon, la.comp, &lb.mon, lb.comp)
        });
        (out, self.syz)
    }
}
