use std::collections::VecDeque;
use std::sync::Arc;

use super::{quiver_of, ARQuiver};
use crate::algebra::Field;
use crate::error::{MfError, Result};
use crate::mf::{MatrixFactorization, MfContext};

type Mf<F> = Arc<MatrixFactorization<F>>;

/// One AR triangle processed during knitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnitStep {
    /// Label of the object whose triangle was taken.
    pub source: String,
    /// Summands of the middle term with multiplicities, in label order of
    /// recognition.
    pub recognized: Vec<(String, usize)>,
    /// Labels introduced while explaining this middle term.
    pub discovered: Vec<String>,
}

/// Outcome of [`knit_from_seed`].
#[derive(Clone, Debug)]
pub struct KnitReport<F: Field> {
    pub labels: Vec<String>,
    pub objects: Vec<Mf<F>>,
    /// Labels that were not among the known objects or the seed.
    pub new_labels: Vec<String>,
    pub steps: Vec<KnitStep>,
}

impl<F: Field> KnitReport<F> {
    pub fn sizes(&self) -> Vec<usize> {
        self.objects.iter().map(|m| m.size()).collect()
    }

    /// The quiver of everything found, by rad/rad² dimensions.
    pub fn quiver(&self, cx: &MfContext<F>) -> Result<ARQuiver> {
        quiver_of(cx, self.labels.clone(), &self.objects)
    }
}

struct Knitter<'a, F: Field> {
    cx: &'a MfContext<F>,
    labels: Vec<String>,
    objects: Vec<Mf<F>>,
    new_labels: Vec<String>,
    queue: VecDeque<usize>,
    /// Unexplained decomposable remainders with the step they came from.
    pending: Vec<(usize, Mf<F>)>,
    steps: Vec<KnitStep>,
}

fn reduced<F: Field>(m: &MatrixFactorization<F>) -> Mf<F> {
    Arc::new(m.reduce_constant_pivots())
}

impl<F: Field> Knitter<'_, F> {
    fn find(&self, x: &Mf<F>) -> Result<Option<usize>> {
        for (i, o) in self.objects.iter().enumerate() {
            if o.size() == x.size() && self.cx.multiplicity(o, x)? > 0 {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn fresh_label(&self) -> String {
        (1..)
            .map(|k| format!("N{k}"))
            .find(|l| !self.labels.contains(l))
            .expect("unbounded supply")
    }

    fn add(&mut self, x: Mf<F>, label: Option<String>, step: Option<usize>) -> Result<usize> {
        let label = label.unwrap_or_else(|| self.fresh_label());
        let idx = self.objects.len();
        self.labels.push(label.clone());
        self.objects.push(x.clone());
        self.new_labels.push(label.clone());
        if let Some(s) = step {
            self.steps[s].discovered.push(label);
        }
        self.queue.push_back(idx);
        self.close_under_shift(idx, step)?;
        Ok(idx)
    }

    fn close_under_shift(&mut self, idx: usize, step: Option<usize>) -> Result<()> {
        let s = reduced(&self.objects[idx].shift());
        if self.find(&s)?.is_none() {
            self.add(s, None, step)?;
        }
        Ok(())
    }

    fn record(&mut self, step: usize, idx: usize, count: usize) {
        let label = self.labels[idx].clone();
        let rec = &mut self.steps[step].recognized;
        match rec.iter_mut().find(|(l, _)| *l == label) {
            Some((_, c)) => *c += count,
            None => rec.push((label, count)),
        }
    }

    /// Splits off every known summand; returns what is left, if nonzero.
    fn explain(&mut self, step: usize, mut rem: Mf<F>) -> Result<Option<Mf<F>>> {
        let mut i = 0;
        while i < self.objects.len() && rem.size() > 0 {
            let obj = self.objects[i].clone();
            let m = self.cx.multiplicity(&obj, &rem)?;
            for _ in 0..m {
                rem = reduced(&self.cx.split_summand(&obj, &rem)?);
            }
            if m > 0 {
                self.record(step, i, m);
            }
            i += 1;
        }
        if rem.size() == 0 || self.cx.hom_dim(&rem, &rem)? == 0 {
            return Ok(None);
        }
        Ok(Some(rem))
    }

    fn settle(&mut self, step: usize, rem: Mf<F>) -> Result<()> {
        let Some(rest) = self.explain(step, rem)? else {
            return Ok(());
        };
        if self.cx.is_indecomposable(&rest)? == Some(true) {
            let idx = self.add(rest, None, Some(step))?;
            self.record(step, idx, 1);
            let waiting = std::mem::take(&mut self.pending);
            for (s, r) in waiting {
                self.settle(s, r)?;
            }
        } else {
            self.pending.push((step, rest));
        }
        Ok(())
    }
}

/// Rebuilds the indecomposables reachable from `seed` by AR triangles.
///
/// Known objects keep their labels and the seed is added under its own
/// label if it is new. Every object found is paired with its shift. Each
/// step takes the AR triangle of a queued object, splits known summands
/// off the middle term and turns an indecomposable remainder into a new
/// object labelled `N1`, `N2`, ... .
pub fn knit_from_seed<F: Field>(
    cx: &MfContext<F>,
    seed: (&str, &Mf<F>),
    known: &[(String, Mf<F>)],
    max_steps: usize,
) -> Result<KnitReport<F>> {
    if seed.1.reduced_entries() && cx.is_indecomposable(seed.1)? != Some(true) {
        return Err(MfError::PreconditionViolated("seed is decomposable".into()));
    }
    let mut k = Knitter {
        cx,
        labels: known.iter().map(|(l, _)| l.clone()).collect(),
        objects: known.iter().map(|(_, o)| o.clone()).collect(),
        new_labels: Vec::new(),
        queue: (0..known.len()).collect(),
        pending: Vec::new(),
        steps: Vec::new(),
    };
    if k.find(seed.1)?.is_none() {
        let label = (!k.labels.iter().any(|l| l == seed.0)).then(|| seed.0.to_string());
        let idx = k.add(seed.1.clone(), label, None)?;
        let seed_label = k.labels[idx].clone();
        k.new_labels.retain(|l| *l != seed_label);
    }
    for i in 0..k.objects.len() {
        k.close_under_shift(i, None)?;
    }
    while let Some(i) = k.queue.pop_front() {
        if k.steps.len() == max_steps {
            return Err(MfError::NonClosure(max_steps));
        }
        let step = k.steps.len();
        k.steps.push(KnitStep {
            source: k.labels[i].clone(),
            recognized: Vec::new(),
            discovered: Vec::new(),
        });
        let tri = cx.ar_triangle(&k.objects[i])?;
        k.settle(step, reduced(&tri.middle))?;
    }
    if let Some((s, r)) = k.pending.first() {
        return Err(MfError::UnrecognizedSummand(format!(
            "a remainder of size {} from the triangle of {} has no known summand",
            r.size(),
            k.steps[*s].source
        )));
    }
    Ok(KnitReport {
        labels: k.labels,
        objects: k.objects,
        new_labels: k.new_labels,
        steps: k.steps,
    })
}
