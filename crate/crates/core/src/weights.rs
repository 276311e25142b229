//! Exhaustive weight enumeration over the row space of a code.
//!
//! Over GF(2) messages are visited in binary reflected Gray order, so each
//! step XORs one packed generator row into the running codeword and the
//! weight is a popcount. Over GF(q), q > 2, only messages whose first nonzero
//! entry is 1 are visited (one per scalar class), with tails walked in the
//! modular q-ary Gray order where each step adds one generator row.
//!
//! The enumeration index space is cut into contiguous chunks. Chunks are
//! independent; their partial counts and witness lists merge associatively,
//! and witnesses are ranked by enumeration index, so the report does not
//! depend on how chunks were scheduled.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::codes::{Code, CodeParams};
use crate::error::{Error, Result};
use crate::gfp::Fe;

/// Witnesses kept per weight.
pub const WITNESS_CAP: usize = 3;

/// Default cap on `q^dimension`.
pub const DEFAULT_BUDGET: u64 = 1 << 32;

const CHUNK: u64 = 1 << 18;

/// How chunks are scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon work stealing. Without the `parallel` feature this runs sequentially.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub message: Vec<u8>,
    pub support: Vec<usize>,
}

impl Witness {
    pub fn weight(&self) -> usize {
        self.support.len()
    }
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    pub params: CodeParams,
    pub length: usize,
    pub dimension: usize,
    pub scanned: u64,
    pub w1: Option<usize>,
    pub w2: Option<usize>,
    /// Complete weight distribution, weight 0 included.
    pub counts: BTreeMap<usize, u64>,
    pub witnesses_w1: Vec<Witness>,
    pub witnesses_w2: Vec<Witness>,
    pub elapsed_ms: u64,
}

/// Wire form of a [`WeightReport`]; field order is the serialized order.
#[derive(Clone, Debug, Serialize)]
pub struct WeightReportJson {
    pub family: String,
    pub q: u32,
    pub n: usize,
    pub d: u32,
    pub length: usize,
    pub dimension: usize,
    pub w1: Option<usize>,
    pub w2: Option<usize>,
    pub counts: BTreeMap<usize, u64>,
    pub witnesses: Vec<Witness>,
    pub scanned: u64,
    pub elapsed_ms: u64,
}

impl WeightReport {
    pub fn to_json(&self) -> WeightReportJson {
        WeightReportJson {
            family: self.params.family.to_string(),
            q: self.params.q(),
            n: self.params.n,
            d: self.params.d,
            length: self.length,
            dimension: self.dimension,
            w1: self.w1,
            w2: self.w2,
            counts: self.counts.clone(),
            witnesses: self
                .witnesses_w1
                .iter()
                .chain(&self.witnesses_w2)
                .cloned()
                .collect(),
            scanned: self.scanned,
            elapsed_ms: self.elapsed_ms,
        }
    }

    /// Total number of codewords represented by `counts`.
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }
}

pub fn codeword_support(code: &Code, message: &[Fe]) -> Result<Vec<usize>> {
    code.codeword_support(message)
}

/// `q^dimension`, or an error naming it if it exceeds `budget`.
pub fn check_budget(code: &Code, budget: u64) -> Result<u64> {
    let q = code.field().q() as u128;
    let required = q.checked_pow(code.dimension as u32).unwrap_or(u128::MAX);
    if required > budget as u128 {
        return Err(Error::budget(
            format!(
                "enumerating {} ({q}^{} codewords)",
                code.params, code.dimension
            ),
            required,
            budget as u128,
        ));
    }
    Ok(required as u64)
}

pub fn weight_report(code: &Code, budget: u64) -> Result<WeightReport> {
    weight_report_with(code, budget, Execution::default())
}

pub fn weight_report_with(code: &Code, budget: u64, exec: Execution) -> Result<WeightReport> {
    let start = Instant::now();
    check_budget(code, budget)?;
    let q = code.field().q();
    let (tally, scanned) = if q == 2 {
        let e = BinaryEnumerator::new(code);
        let total = 1u64 << code.dimension;
        (run_chunks(total, exec, |s, t| e.run(s, t)), total)
    } else {
        let e = ClassEnumerator::new(code);
        let total = e.total();
        let mut tally = run_chunks(total, exec, |s, t| e.run(s, t));
        // Each representative stands for q-1 codewords; the zero word is alone.
        for c in tally.counts.iter_mut() {
            *c *= (q - 1) as u64;
        }
        tally.counts[0] += 1;
        (tally, total + 1)
    };
    Ok(finish(code, tally, scanned, start))
}

fn finish(code: &Code, tally: Tally, scanned: u64, start: Instant) -> WeightReport {
    let counts: BTreeMap<usize, u64> = tally
        .counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(w, &c)| (w, c))
        .collect();
    let mut nonzero = counts.keys().copied().filter(|&w| w > 0);
    let w1 = nonzero.next();
    let w2 = nonzero.next();
    let witnesses = |w: Option<usize>| -> Vec<Witness> {
        let Some(w) = w else { return Vec::new() };
        tally
            .witnesses
            .get(&w)
            .map(|list| {
                list.iter()
                    .map(|(_, msg)| {
                        let message: Vec<Fe> = msg.iter().map(|&v| Fe(v)).collect();
                        let support = code.codeword_support(&message).expect("dimension matches");
                        debug_assert_eq!(support.len(), w);
                        Witness {
                            message: msg.clone(),
                            support,
                        }
                    })
                    .collect()
            })
            .unwrap_or_default()
    };
    WeightReport {
        params: code.params,
        length: code.length,
        dimension: code.dimension,
        scanned,
        w1,
        w2,
        witnesses_w1: witnesses(w1),
        witnesses_w2: witnesses(w2),
        counts,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Partial result over one chunk of the enumeration index space.
#[derive(Clone, Debug, Default)]
struct Tally {
    counts: Vec<u64>,
    /// weight -> up to WITNESS_CAP (enumeration index, message) pairs
    witnesses: BTreeMap<usize, Vec<(u64, Vec<u8>)>>,
}

impl Tally {
    fn new(length: usize) -> Self {
        Tally {
            counts: vec![0; length + 1],
            witnesses: BTreeMap::new(),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        if self.counts.len() < other.counts.len() {
            self.counts.resize(other.counts.len(), 0);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        for (w, list) in other.witnesses {
            let slot = self.witnesses.entry(w).or_default();
            slot.extend(list);
            slot.sort_by_key(|(i, _)| *i);
            slot.truncate(WITNESS_CAP);
        }
        self
    }
}

fn run_chunks<F>(total: u64, exec: Execution, run: F) -> Tally
where
    F: Fn(u64, u64) -> Tally + Sync,
{
    let nchunks = total.div_ceil(CHUNK).max(1);
    let chunk = |i: u64| run(i * CHUNK, ((i + 1) * CHUNK).min(total));
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..nchunks)
                .into_par_iter()
                .map(chunk)
                .reduce(Tally::default, Tally::merge)
        }
        _ => (0..nchunks).map(chunk).fold(Tally::default(), Tally::merge),
    }
}

#[inline]
fn gray(t: u64) -> u64 {
    t ^ (t >> 1)
}

struct BinaryEnumerator<'a> {
    length: usize,
    dimension: usize,
    wpr: usize,
    rows: &'a [u64],
}

impl<'a> BinaryEnumerator<'a> {
    fn new(code: &'a Code) -> Self {
        let packed = code.packed().expect("binary code has a packed generator");
        BinaryEnumerator {
            length: code.length,
            dimension: code.dimension,
            wpr: packed.words_per_row(),
            rows: packed.words(),
        }
    }

    fn message(&self, g: u64) -> Vec<u8> {
        (0..self.dimension).map(|i| (g >> i & 1) as u8).collect()
    }

    #[inline]
    fn record(&self, tally: &mut Tally, w: usize, t: u64) {
        tally.counts[w] += 1;
        if tally.counts[w] as usize <= WITNESS_CAP && w > 0 {
            tally
                .witnesses
                .entry(w)
                .or_default()
                .push((t, self.message(gray(t))));
        }
    }

    fn run(&self, start: u64, end: u64) -> Tally {
        let mut tally = Tally::new(self.length);
        if start >= end {
            return tally;
        }
        let wpr = self.wpr;
        let mut cw = vec![0u64; wpr.max(1)];
        let g = gray(start);
        for i in 0..self.dimension {
            if g >> i & 1 == 1 {
                for (c, r) in cw.iter_mut().zip(&self.rows[i * wpr..(i + 1) * wpr]) {
                    *c ^= r;
                }
            }
        }
        let weight = |cw: &[u64]| cw.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        self.record(&mut tally, weight(&cw), start);

        if wpr == 1 {
            let mut word = cw[0];
            for t in start + 1..end {
                word ^= self.rows[t.trailing_zeros() as usize];
                let w = word.count_ones() as usize;
                // counts only; witnesses are rare enough for the slow path
                if tally.counts[w] < WITNESS_CAP as u64 {
                    self.record(&mut tally, w, t);
                } else {
                    tally.counts[w] += 1;
                }
            }
        } else {
            for t in start + 1..end {
                let j = t.trailing_zeros() as usize;
                for (c, r) in cw.iter_mut().zip(&self.rows[j * wpr..(j + 1) * wpr]) {
                    *c ^= r;
                }
                let w = weight(&cw);
                if tally.counts[w] < WITNESS_CAP as u64 {
                    self.record(&mut tally, w, t);
                } else {
                    tally.counts[w] += 1;
                }
            }
        }
        tally
    }
}

/// Enumerates one message per scalar class: first nonzero entry equal to 1.
struct ClassEnumerator {
    q: u8,
    length: usize,
    dimension: usize,
    /// Sparse rows: (column, value).
    rows: Vec<Vec<(usize, u8)>>,
    /// Start index of the block whose leading 1 sits at position p.
    block_start: Vec<u64>,
}

impl ClassEnumerator {
    fn new(code: &Code) -> Self {
        let q = code.field().q();
        let rows = code
            .gen
            .iter_rows()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.0))
                    .collect()
            })
            .collect();
        let dim = code.dimension;
        let mut block_start = Vec::with_capacity(dim + 1);
        let mut acc = 0u64;
        for p in 0..dim {
            block_start.push(acc);
            acc += (q as u64).pow((dim - p - 1) as u32);
        }
        block_start.push(acc);
        ClassEnumerator {
            q,
            length: code.length,
            dimension: dim,
            rows,
            block_start,
        }
    }

    fn total(&self) -> u64 {
        *self.block_start.last().unwrap()
    }

    /// Message of enumeration index `u`: block p, tail in modular Gray order.
    fn message(&self, p: usize, t: u64) -> Vec<u8> {
        let q = self.q as u64;
        let tail_len = self.dimension - p - 1;
        let mut msg = vec![0u8; self.dimension];
        msg[p] = 1;
        let digits: Vec<u64> = (0..tail_len).map(|i| t / q.pow(i as u32) % q).collect();
        for i in 0..tail_len {
            let next = digits.get(i + 1).copied().unwrap_or(0);
            msg[p + 1 + i] = ((digits[i] + q - next) % q) as u8;
        }
        msg
    }

    #[inline]
    fn add_row(&self, cw: &mut [u8], weight: &mut usize, row: usize, times: u8) {
        let q = self.q;
        for &(c, v) in &self.rows[row] {
            let old = cw[c];
            let new = ((old as u16 + v as u16 * times as u16) % q as u16) as u8;
            *weight = *weight + (new != 0) as usize - (old != 0) as usize;
            cw[c] = new;
        }
    }

    fn run(&self, start: u64, end: u64) -> Tally {
        let mut tally = Tally::new(self.length);
        let q = self.q as u64;
        for p in 0..self.dimension {
            let (bs, be) = (self.block_start[p], self.block_start[p + 1]);
            let (s, e) = (start.max(bs), end.min(be));
            if s >= e {
                continue;
            }
            let mut cw = vec![0u8; self.length];
            let mut weight = 0usize;
            let msg = self.message(p, s - bs);
            for (i, &m) in msg.iter().enumerate() {
                if m != 0 {
                    self.add_row(&mut cw, &mut weight, i, m);
                }
            }
            let record = |tally: &mut Tally, w: usize, u: u64| {
                tally.counts[w] += 1;
                if tally.counts[w] as usize <= WITNESS_CAP {
                    tally
                        .witnesses
                        .entry(w)
                        .or_default()
                        .push((u, self.message(p, u - bs)));
                }
            };
            record(&mut tally, weight, s);
            for u in s + 1..e {
                // index of the digit that changes: trailing (q-1) digits of t-1
                let mut prev = u - 1 - bs;
                let mut j = 0;
                while prev % q == q - 1 {
                    prev /= q;
                    j += 1;
                }
                self.add_row(&mut cw, &mut weight, p + 1 + j, 1);
                record(&mut tally, weight, u);
            }
        }
        tally
    }
}

/// Independent oracle: encode every message by matrix multiplication.
pub fn naive_weight_counts(code: &Code, budget: u64) -> Result<BTreeMap<usize, u64>> {
    let total = check_budget(code, budget)?;
    let f = code.field();
    let q = f.q() as u64;
    let mut counts = BTreeMap::new();
    let mut msg = vec![Fe::ZERO; code.dimension];
    for m in 0..total {
        let mut v = m;
        for slot in msg.iter_mut() {
            *slot = Fe((v % q) as u8);
            v /= q;
        }
        let w = code.encode(&msg)?.iter().filter(|c| !c.is_zero()).count();
        *counts.entry(w).or_insert(0) += 1;
    }
    Ok(counts)
}
