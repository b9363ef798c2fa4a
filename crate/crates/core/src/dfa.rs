//! Finite automata over bit-tuple alphabets and inference of the balance
//! automaton for Zeckendorf pair encodings.
//!
//! [`infer_min_dfa`] is a bounded Myhill–Nerode construction: a prefix `u`
//! is identified with the labels of `u·v` over every valid suffix `v` with
//! `|v| ≤ depth`, with labels taken from a [`SampleTable`] of exact verdicts.
//! Continuations that break the no-adjacent-ones rule lead nowhere: they are
//! left undefined instead of being routed to a dead state. The class of
//! prefixes with no balanced completion is dropped the same way, so the state
//! count covers live states only.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fib_balance::BalanceSweep;
use crate::numeration::{encode_pair, fibonacci, PairSymbol};

/// Largest sample length accepted by [`build_sample_table`].
pub const MAX_SAMPLE_LEN: usize = 18;

/// Deterministic automaton with start state 0 and possibly partial
/// transitions. Symbols are tuples of bits packed msd-first into an index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    arity: usize,
    transitions: Vec<Vec<Option<usize>>>,
    accepting: Vec<bool>,
}

impl Dfa {
    /// `states` states, no transitions, nothing accepting.
    pub fn new(arity: usize, states: usize) -> Self {
        assert!((1..=8).contains(&arity), "arity {arity} out of range");
        Self { arity, transitions: vec![vec![None; 1 << arity]; states], accepting: vec![false; states] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn alphabet_size(&self) -> usize {
        1 << self.arity
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.transitions.push(vec![None; self.alphabet_size()]);
        self.accepting.push(accepting);
        self.transitions.len() - 1
    }

    pub fn set_transition(&mut self, from: usize, symbol: usize, to: usize) {
        self.transitions[from][symbol] = Some(to);
    }

    pub fn set_accepting(&mut self, state: usize, accepting: bool) {
        self.accepting[state] = accepting;
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting.iter().enumerate().filter(|(_, &a)| a).map(|(q, _)| q)
    }

    pub fn next(&self, state: usize, symbol: usize) -> Option<usize> {
        self.transitions[state][symbol]
    }

    pub fn is_total(&self) -> bool {
        self.transitions.iter().all(|row| row.iter().all(Option::is_some))
    }

    /// State reached after reading `word`.
    pub fn trace(&self, word: &[usize]) -> Result<usize> {
        word.iter().try_fold(0, |q, &s| {
            self.next(q, s).ok_or_else(|| Error::UndefinedTransition { state: q, symbol: self.symbol_name(s) })
        })
    }

    /// Acceptance; a missing transition rejects.
    pub fn run(&self, word: &[usize]) -> bool {
        self.trace(word).is_ok_and(|q| self.accepting[q])
    }

    /// Runs a two-track automaton on the Zeckendorf pair encoding of `(m, n)`.
    pub fn accepts_pair(&self, m: u64, n: u64) -> bool {
        assert_eq!(self.arity, 2, "pair input needs a two-track automaton");
        let word: Vec<usize> = encode_pair(m, n).into_iter().map(PairSymbol::code).collect();
        self.run(&word)
    }

    pub fn symbol_name(&self, symbol: usize) -> String {
        let bits: Vec<String> =
            (0..self.arity).rev().map(|k| ((symbol >> k) & 1).to_string()).collect();
        format!("[{}]", bits.join(","))
    }

    fn parse_symbol(&self, s: &str) -> Option<usize> {
        let inner = s.strip_prefix('[')?.strip_suffix(']')?;
        let bits: Vec<&str> = inner.split(',').map(str::trim).collect();
        if bits.len() != self.arity {
            return None;
        }
        bits.iter().try_fold(0usize, |acc, b| match *b {
            "0" => Some(acc << 1),
            "1" => Some(acc << 1 | 1),
            _ => None,
        })
    }

    /// Textual form: header lines, then one `state [bits] -> state` line per
    /// defined transition.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "arity {}", self.arity).unwrap();
        writeln!(out, "states {}", self.num_states()).unwrap();
        writeln!(out, "start 0").unwrap();
        let acc: Vec<String> = self.accepting_states().map(|q| q.to_string()).collect();
        writeln!(out, "accepting {}", acc.join(" ")).unwrap();
        for (q, row) in self.transitions.iter().enumerate() {
            for (s, to) in row.iter().enumerate() {
                if let Some(to) = to {
                    writeln!(out, "{q} {} -> {to}", self.symbol_name(s)).unwrap();
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut dfa: Option<Dfa> = None;
        let mut arity = None;
        let mut accepting: Vec<usize> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let bad = |reason: &str| Error::Parse { line, reason: reason.to_string() };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().unwrap();
            match head {
                "arity" => {
                    let a: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(|| bad("bad arity"))?;
                    if !(1..=8).contains(&a) {
                        return Err(bad("arity must be between 1 and 8"));
                    }
                    arity = Some(a);
                }
                "states" => {
                    let a = arity.ok_or_else(|| bad("states before arity"))?;
                    let k: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(|| bad("bad state count"))?;
                    if k == 0 {
                        return Err(bad("an automaton needs a start state"));
                    }
                    dfa = Some(Dfa::new(a, k));
                }
                "start" => {
                    if words.next() != Some("0") {
                        return Err(bad("start state must be 0"));
                    }
                }
                "accepting" => {
                    for w in words {
                        accepting.push(w.parse().map_err(|_| bad("bad accepting state"))?);
                    }
                }
                _ => {
                    let d = dfa.as_mut().ok_or_else(|| bad("transition before header"))?;
                    let parts: Vec<&str> = content.split_whitespace().collect();
                    let [from, sym, "->", to] = parts.as_slice() else {
                        return Err(bad("expected `state [bits] -> state`"));
                    };
                    let from: usize = from.parse().map_err(|_| bad("bad source state"))?;
                    let to: usize = to.parse().map_err(|_| bad("bad target state"))?;
                    let s = d.parse_symbol(sym).ok_or_else(|| bad("bad symbol"))?;
                    if from >= d.num_states() || to >= d.num_states() {
                        return Err(bad("state out of range"));
                    }
                    if d.transitions[from][s].is_some_and(|old| old != to) {
                        return Err(bad("nondeterministic transition"));
                    }
                    d.set_transition(from, s, to);
                }
            }
        }
        let mut d = dfa.ok_or(Error::Parse { line: 0, reason: "missing header".into() })?;
        for q in accepting {
            if q >= d.num_states() {
                return Err(Error::Parse { line: 0, reason: format!("accepting state {q} out of range") });
            }
            d.set_accepting(q, true);
        }
        Ok(d)
    }

    /// Moore partition refinement; undefined transitions act as a shared dead
    /// state that is not materialized. Unreachable states are dropped.
    pub fn minimize(&self) -> Dfa {
        let sigma = self.alphabet_size();
        let reachable = self.reachable();
        let states: Vec<usize> = (0..self.num_states()).filter(|&q| reachable[q]).collect();
        let mut class: HashMap<usize, usize> = states.iter().map(|&q| (q, self.accepting[q] as usize)).collect();
        let mut count = 0;
        loop {
            let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
            let mut next: HashMap<usize, usize> = HashMap::new();
            for &q in &states {
                let key = (class[&q], (0..sigma).map(|s| self.transitions[q][s].map(|t| class[&t])).collect());
                let fresh = ids.len();
                next.insert(q, *ids.entry(key).or_insert(fresh));
            }
            let stable = ids.len() == count;
            count = ids.len();
            class = next;
            if stable {
                break;
            }
        }
        // Renumber classes in breadth-first order from the start state.
        let mut order: HashMap<usize, usize> = HashMap::new();
        let mut queue = VecDeque::from([0usize]);
        order.insert(class[&0], 0);
        let mut out = Dfa::new(self.arity, 1);
        out.set_accepting(0, self.accepting[0]);
        let mut rep_of = vec![0usize];
        while let Some(qi) = queue.pop_front() {
            let q = rep_of[qi];
            for s in 0..sigma {
                if let Some(t) = self.transitions[q][s] {
                    let c = class[&t];
                    let ti = *order.entry(c).or_insert_with(|| {
                        rep_of.push(t);
                        queue.push_back(rep_of.len() - 1);
                        out.add_state(self.accepting[t])
                    });
                    out.set_transition(qi, s, ti);
                }
            }
        }
        out.prune_dead()
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(q) = stack.pop() {
            for t in self.transitions[q].iter().flatten() {
                if !seen[*t] {
                    seen[*t] = true;
                    stack.push(*t);
                }
            }
        }
        seen
    }

    /// Removes non-start states from which no accepting state is reachable.
    fn prune_dead(self) -> Dfa {
        let n = self.num_states();
        let mut live = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..n {
                if !live[q] && self.transitions[q].iter().flatten().any(|&t| live[t]) {
                    live[q] = true;
                    changed = true;
                }
            }
        }
        if live.iter().all(|&l| l) {
            return self;
        }
        let mut map = vec![None; n];
        let mut next = 0;
        for q in 0..n {
            if live[q] || q == 0 {
                map[q] = Some(next);
                next += 1;
            }
        }
        let mut out = Dfa::new(self.arity, next);
        for q in 0..n {
            let Some(nq) = map[q] else { continue };
            out.set_accepting(nq, self.accepting[q]);
            for (s, t) in self.transitions[q].iter().enumerate() {
                if let Some(nt) = t.and_then(|t| map[t]) {
                    out.set_transition(nq, s, nt);
                }
            }
        }
        out
    }
}

/// Exact balance labels for every pair encodable in `max_len` symbols,
/// i.e. every `m, n < F_{max_len+2}`.
#[derive(Clone, Debug)]
pub struct SampleTable {
    max_len: usize,
    side: u64,
    bits: Vec<u64>,
}

impl SampleTable {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Number of values per coordinate, `F_{max_len+2}`.
    pub fn side(&self) -> u64 {
        self.side
    }

    pub fn contains(&self, m: u64, n: u64) -> bool {
        m < self.side && n < self.side
    }

    #[inline]
    pub fn label(&self, m: u64, n: u64) -> bool {
        assert!(self.contains(m, n), "({m},{n}) outside the sample");
        let k = m * self.side + n;
        self.bits[(k / 64) as usize] >> (k % 64) & 1 == 1
    }

    pub fn balanced_count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Label of a pair word, or `None` when a track has adjacent ones.
    pub fn label_word(&self, word: &[PairSymbol]) -> Option<bool> {
        let (m, n) = crate::numeration::decode_pair(word).ok()?;
        Some(self.label(m, n))
    }
}

/// Labels every pair with `m, n < F_{max_len+2}` by sweeping the grid.
pub fn build_sample_table(max_len: usize) -> Result<SampleTable> {
    if max_len > MAX_SAMPLE_LEN {
        return Err(Error::BudgetExceeded { requested: max_len as u64, cap: MAX_SAMPLE_LEN as u64 });
    }
    let side = fibonacci(max_len + 2);
    let sweep = BalanceSweep::new(2 * side);
    let rows: Vec<Vec<bool>> = (0..side)
        .into_par_iter()
        .map(|m| sweep.row(m, 0, side - 1).iter().map(|r| r.is_balanced()).collect())
        .collect();
    let mut bits = vec![0u64; ((side * side).div_ceil(64)) as usize];
    for (k, b) in rows.iter().flatten().enumerate() {
        if *b {
            bits[k / 64] |= 1 << (k % 64);
        }
    }
    Ok(SampleTable { max_len, side, bits })
}

/// Internally valid suffix with its track values and first digits.
struct Suffix {
    len: usize,
    m: u64,
    n: u64,
    first: u8,
}

/// Valid pair words of length ≤ depth, shortest first.
fn valid_suffixes(depth: usize) -> Vec<Suffix> {
    let mut out = vec![Suffix { len: 0, m: 0, n: 0, first: 0 }];
    // (m digits, n digits) as bit strings, msd first.
    let mut layer: Vec<(u32, u32)> = vec![(0, 0)];
    for len in 1..=depth {
        let mut next = Vec::new();
        for &(a, b) in &layer {
            for s in 0..4u32 {
                let (x, y) = (s >> 1, s & 1);
                let lead_a = len > 1 && (a >> (len - 2)) & 1 == 1;
                let lead_b = len > 1 && (b >> (len - 2)) & 1 == 1;
                if (x == 1 && lead_a) || (y == 1 && lead_b) {
                    continue;
                }
                next.push((a | x << (len - 1), b | y << (len - 1)));
            }
        }
        for &(a, b) in &next {
            let value = |bits: u32| (0..len).filter(|k| bits >> k & 1 == 1).map(|k| fibonacci(len + 1 - k)).sum();
            let first = ((a & 1) << 1 | (b & 1)) as u8;
            out.push(Suffix { len, m: value(a), n: value(b), first });
        }
        layer = next;
    }
    out
}

/// A prefix in the inference, stored as its two tracks.
#[derive(Clone, Debug)]
struct Prefix {
    m_digits: Vec<u8>,
    n_digits: Vec<u8>,
}

impl Prefix {
    fn empty() -> Self {
        Self { m_digits: Vec::new(), n_digits: Vec::new() }
    }

    fn len(&self) -> usize {
        self.m_digits.len()
    }

    fn extend(&self, symbol: usize) -> Option<Self> {
        let (x, y) = ((symbol >> 1) as u8, (symbol & 1) as u8);
        if (x == 1 && self.m_digits.last() == Some(&1)) || (y == 1 && self.n_digits.last() == Some(&1)) {
            return None;
        }
        let mut p = self.clone();
        p.m_digits.push(x);
        p.n_digits.push(y);
        Some(p)
    }

    /// The same prefix behind one `[0,0]`.
    fn padded(&self) -> Self {
        let mut p = Self { m_digits: vec![0], n_digits: vec![0] };
        p.m_digits.extend(&self.m_digits);
        p.n_digits.extend(&self.n_digits);
        p
    }

    fn render(&self) -> String {
        let word: Vec<PairSymbol> = self.m_digits.iter().zip(&self.n_digits).map(|(&a, &b)| PairSymbol(a, b)).collect();
        crate::numeration::format_pair_word(&word)
    }

    fn last(&self) -> u8 {
        match (self.m_digits.last(), self.n_digits.last()) {
            (Some(&x), Some(&y)) => x << 1 | y,
            _ => 0,
        }
    }

    /// Track values once `shift` more digits are appended.
    fn shifted(&self, shift: usize) -> (u64, u64) {
        let len = self.len();
        let value = |d: &[u8]| {
            d.iter().enumerate().filter(|(_, &b)| b == 1).map(|(k, _)| fibonacci(shift + len + 1 - k)).sum()
        };
        (value(&self.m_digits), value(&self.n_digits))
    }
}

/// Labels of `u·v` over the suffixes of length ≤ `depth`, as bits.
fn signature(table: &SampleTable, suffixes: &[Suffix], u: &Prefix, depth: usize) -> Vec<bool> {
    let mut shifted: Vec<(u64, u64)> = Vec::with_capacity(depth + 1);
    for s in 0..=depth {
        shifted.push(u.shifted(s));
    }
    let last = u.last();
    suffixes
        .iter()
        .take_while(|v| v.len <= depth)
        .map(|v| {
            if last & v.first != 0 {
                return false;
            }
            let (um, un) = shifted[v.len];
            table.label(um + v.m, un + v.n)
        })
        .collect()
}

/// Bounded Myhill–Nerode quotient of the sample.
pub fn infer_min_dfa(table: &SampleTable, depth: usize) -> Result<Dfa> {
    let max_len = table.max_len();
    if depth == 0 || depth > max_len {
        return Err(Error::InvalidArgument(format!("depth {depth} must lie in 1..={max_len}")));
    }
    let horizon = max_len - depth;
    let suffixes = valid_suffixes(depth);
    let sign = |u: &Prefix, d: usize| signature(table, &suffixes, u, d);
    let mut classes: HashMap<Vec<bool>, usize> = HashMap::new();
    // Representative prefix of each state; leaves have none.
    let mut reps: Vec<Option<Prefix>> = Vec::new();
    let mut dfa = Dfa::new(2, 0);
    let start = Prefix::empty();
    let sig = sign(&start, depth);
    dfa.add_state(sig[0]);
    classes.insert(sig, 0);
    reps.push(Some(start));
    let mut queue = VecDeque::from([0usize]);
    // Signatures cut one symbol short, for successors beyond the fully
    // sampled prefix length.
    let mut shallow: Vec<Option<Vec<bool>>> = Vec::new();
    while let Some(q) = queue.pop_front() {
        let rep = reps[q].clone().expect("queued states have representatives");
        for s in 0..4 {
            let Some(w) = rep.extend(s) else { continue };
            let target = if w.len() <= horizon {
                let sig = sign(&w, depth);
                match classes.get(&sig) {
                    Some(&c) => c,
                    None => {
                        let c = dfa.add_state(sig[0]);
                        classes.insert(sig, c);
                        reps.push(Some(w));
                        queue.push_back(c);
                        c
                    }
                }
            } else {
                while shallow.len() < reps.len() {
                    let k = shallow.len();
                    shallow.push(reps[k].as_ref().map(|r| sign(r, depth - 1)));
                }
                let sig = sign(&w, depth - 1);
                match shallow.iter().position(|x| x.as_ref() == Some(&sig)) {
                    Some(c) => c,
                    // Too short a sample to place it: keep it as a leaf.
                    None => {
                        reps.push(None);
                        dfa.add_state(sig[0])
                    }
                }
            };
            dfa.set_transition(q, s, target);
        }
    }
    for rep in reps.iter().flatten() {
        let padded = rep.padded();
        let d = depth.min(max_len.saturating_sub(padded.len()));
        if padded.len() <= max_len && sign(rep, d) != sign(&padded, d) {
            return Err(Error::InconsistentSample { prefix: rep.render() });
        }
    }
    Ok(dfa.minimize())
}

/// Default distinguishing depth for a sample of length `max_len`.
pub fn default_depth(max_len: usize) -> usize {
    max_len.saturating_sub(4).max(max_len / 2)
}

/// Inferred state counts for each sample length, at the default depth.
pub fn state_count_stability(lens: &[usize]) -> Result<Vec<(usize, usize)>> {
    lens.iter()
        .map(|&len| {
            let table = build_sample_table(len)?;
            Ok((len, infer_min_dfa(&table, default_depth(len))?.num_states()))
        })
        .collect()
}

/// Pairs `(m, n)` with `m, n < side` on which `dfa` disagrees with `table`.
pub fn replay_disagreements(dfa: &Dfa, table: &SampleTable) -> Vec<(u64, u64)> {
    let side = table.side();
    (0..side)
        .into_par_iter()
        .flat_map_iter(|m| (0..side).filter(move |&n| dfa.accepts_pair(m, n) != table.label(m, n)).map(move |n| (m, n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fib_balance::exact_balance;
    use crate::numeration::parse_pair_word;

    fn codes(word: &str) -> Vec<usize> {
        parse_pair_word(word).unwrap().into_iter().map(PairSymbol::code).collect()
    }

    fn inferred() -> (SampleTable, Dfa) {
        let table = build_sample_table(14).unwrap();
        let dfa = infer_min_dfa(&table, default_depth(14)).unwrap();
        (table, dfa)
    }

    #[test]
    fn sample_table_examples() {
        let t = build_sample_table(3).unwrap();
        assert_eq!(t.side(), 5);
        assert!(t.label(4, 3));
        assert!(t.label(0, 0));
        assert!(!t.label(4, 4));
        assert!(matches!(build_sample_table(19), Err(Error::BudgetExceeded { .. })));
        let big = build_sample_table(10).unwrap();
        for m in 0..big.side() {
            for n in 0..big.side() {
                assert_eq!(big.label(m, n), exact_balance(m, n).is_balanced());
            }
        }
        assert_eq!(big.label_word(&parse_pair_word("[0,0][1,0][0,1]").unwrap()), Some(big.label(2, 1)));
        assert_eq!(big.label_word(&parse_pair_word("[1,0][1,0]").unwrap()), None);
    }

    #[test]
    fn suffix_enumeration_counts() {
        let s = valid_suffixes(6);
        for d in 0..=6 {
            let f = fibonacci(d + 2) as usize;
            assert_eq!(s.iter().filter(|v| v.len == d).count(), f * f);
        }
    }

    #[test]
    fn inferred_automaton_examples() {
        let (table, dfa) = inferred();
        assert_eq!(dfa.num_states(), 15);
        assert!(dfa.run(&codes("[0,1][0,0][0,1][1,0][0,0][1,0]")));
        assert!(dfa.run(&[]));
        assert!(!dfa.accepts_pair(4, 4));
        assert!(dfa.accepts_pair(4, 3));
        assert!(replay_disagreements(&dfa, &table).is_empty());
        assert_eq!(dfa.minimize().num_states(), 15);
    }

    #[test]
    fn padding_invariance() {
        let (_, dfa) = inferred();
        for m in 0..200 {
            for n in 0..200 {
                let w: Vec<usize> = encode_pair(m, n).into_iter().map(PairSymbol::code).collect();
                let mut padded = vec![0, 0];
                padded.extend(&w);
                assert_eq!(dfa.run(&w), dfa.run(&padded), "({m},{n})");
            }
        }
    }

    #[test]
    fn coarse_samples_do_not_overshoot() {
        let table = build_sample_table(4).unwrap();
        assert_eq!(default_depth(4), 2);
        assert_eq!(default_depth(14), 10);
        assert!(infer_min_dfa(&table, default_depth(4)).unwrap().num_states() <= 15);
        assert!(matches!(infer_min_dfa(&table, 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn text_round_trip() {
        let (_, dfa) = inferred();
        let text = dfa.to_text();
        assert!(text.starts_with("arity 2\nstates 15\nstart 0\n"));
        assert_eq!(Dfa::from_text(&text).unwrap(), dfa);
        assert!(matches!(Dfa::from_text("arity 2\nstates 1\n0 [0,2] -> 0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Dfa::from_text("0 [0,0] -> 0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn partial_transitions_reject() {
        let mut d = Dfa::new(2, 2);
        d.set_transition(0, 1, 1);
        d.set_accepting(1, true);
        assert!(d.run(&[1]));
        assert!(!d.run(&[1, 1]));
        assert_eq!(
            d.trace(&[1, 2]),
            Err(Error::UndefinedTransition { state: 1, symbol: "[1,0]".into() })
        );
        assert!(!d.is_total());
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        // Two accepting states with identical behavior collapse into one.
        let mut d = Dfa::new(1, 3);
        d.set_transition(0, 0, 1);
        d.set_transition(0, 1, 2);
        d.set_transition(1, 0, 1);
        d.set_transition(2, 0, 2);
        d.set_accepting(1, true);
        d.set_accepting(2, true);
        let m = d.minimize();
        assert_eq!(m.num_states(), 2);
        for w in [vec![0], vec![1, 0, 0], vec![1, 1]] {
            assert_eq!(m.run(&w), d.run(&w));
        }
    }
}
