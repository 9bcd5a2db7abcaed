use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use parking_lot::RwLock;
use serde_json::Value;

use super::seq::ShuffleSeq;
use crate::error::{Error, Result};
use crate::polycore::format::{from_json, poly_json_value};
use crate::polycore::{FracPoly, Polynomial};

/// Concurrent memo of `f̃_v`, keyed by the exact sequence.
///
/// Insertion is idempotent. Inserting a different value for a present key is
/// an invariant violation and panics.
#[derive(Default)]
pub struct MemoTable {
    map: RwLock<HashMap<ShuffleSeq, Arc<Polynomial>>>,
}

impl MemoTable {
    pub fn get(&self, v: &ShuffleSeq) -> Option<Arc<Polynomial>> {
        self.map.read().get(v).cloned()
    }

    pub fn contains(&self, v: &ShuffleSeq) -> bool {
        self.map.read().contains_key(v)
    }

    pub fn insert(&self, v: ShuffleSeq, p: Polynomial) -> Arc<Polynomial> {
        let mut map = self.map.write();
        if let Some(old) = map.get(&v) {
            assert!(**old == p, "memo divergence for {v}: {old} versus {p}");
            return old.clone();
        }
        let p = Arc::new(p);
        map.insert(v, p.clone());
        p
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot in sorted key order (length first, then bit string).
    pub fn entries(&self) -> Vec<(ShuffleSeq, Arc<Polynomial>)> {
        let mut v: Vec<_> = self
            .map
            .read()
            .iter()
            .map(|(k, p)| (*k, p.clone()))
            .collect();
        v.sort_by_key(|(k, _)| (k.len(), k.to_string()));
        v
    }
}

/// What `f̃_v` is built from under the normalised recursion.
enum Rule {
    Empty,
    /// `v = u·1`: `(t^{|u|} + a) f̃_u`.
    AppendOne(ShuffleSeq),
    /// `v = 0^n`: `f̃_{1·0^{n-1}}`.
    AllZeros(ShuffleSeq),
    /// `v = u·0`: `q f̃_{0·u} + (1 - q) f̃_{1·u}`.
    AppendZero {
        zero_u: ShuffleSeq,
        one_u: ShuffleSeq,
    },
}

fn rule_for(v: ShuffleSeq) -> Rule {
    match v.split_last() {
        None => Rule::Empty,
        Some((u, true)) => Rule::AppendOne(u),
        Some((u, false)) if v.is_all_zeros() => Rule::AllZeros(u.push_front(true)),
        Some((u, false)) => Rule::AppendZero {
            zero_u: u.push_front(false),
            one_u: u.push_front(true),
        },
    }
}

fn deps(rule: &Rule) -> Vec<ShuffleSeq> {
    match rule {
        Rule::Empty => vec![],
        Rule::AppendOne(u) | Rule::AllZeros(u) => vec![*u],
        Rule::AppendZero { zero_u, one_u } => vec![*zero_u, *one_u],
    }
}

/// Memoised evaluator of the normalised polynomials `f̃_v`.
///
/// Works entirely with polynomials: the rules are closed over `ℤ[q, a, t]`.
/// Evaluation uses an explicit work list, not native recursion.
#[derive(Default)]
pub struct SeqEngine {
    memo: MemoTable,
}

impl SeqEngine {
    pub fn new() -> Self {
        SeqEngine::default()
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    pub fn tilde_f(&self, v: ShuffleSeq) -> Arc<Polynomial> {
        if let Some(p) = self.memo.get(&v) {
            return p;
        }
        let mut stack = vec![v];
        while let Some(&top) = stack.last() {
            if self.memo.contains(&top) {
                stack.pop();
                continue;
            }
            let rule = rule_for(top);
            let missing: Vec<_> = deps(&rule)
                .into_iter()
                .filter(|d| !self.memo.contains(d))
                .collect();
            if missing.is_empty() {
                let value = self.apply(&rule, top);
                self.memo.insert(top, value);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        self.memo.get(&v).expect("just computed")
    }

    fn apply(&self, rule: &Rule, v: ShuffleSeq) -> Polynomial {
        let get = |u: &ShuffleSeq| self.memo.get(u).expect("dependency resolved");
        match rule {
            Rule::Empty => Polynomial::one(),
            Rule::AppendOne(u) => {
                let k = u.count_ones() as i32;
                let factor = &Polynomial::qat(0, 0, k) + &Polynomial::a();
                &factor * &*get(u)
            }
            Rule::AllZeros(u) => (*get(u)).clone(),
            Rule::AppendZero { zero_u, one_u } => {
                debug_assert!(!v.is_all_zeros());
                let q = Polynomial::q();
                let one_minus_q = &Polynomial::one() - &q;
                &(&q * &*get(zero_u)) + &(&one_minus_q * &*get(one_u))
            }
        }
    }

    /// `f_v = f̃_v / (1 - q)^{#zeroes(v)}`.
    pub fn f(&self, v: ShuffleSeq) -> FracPoly {
        FracPoly::over_one_minus_q((*self.tilde_f(v)).clone(), v.count_zeros() as u32)
    }

    /// Writes the memo as a JSON object mapping bit strings to polynomial JSON.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let mut obj = serde_json::Map::new();
        for (k, p) in self.memo.entries() {
            obj.insert(k.to_string(), poly_json_value(&p));
        }
        std::fs::write(path, Value::Object(obj).to_string())?;
        Ok(())
    }

    /// Loads a memo cache, recomputing a deterministic sample of entries
    /// (fraction `sample_rate`, at least one entry when the file is nonempty)
    /// with a fresh engine and rejecting the file on any mismatch.
    pub fn load_cache(&self, path: &Path, sample_rate: f64) -> Result<usize> {
        let text = std::fs::read_to_string(path)?;
        let doc: BTreeMap<String, Value> = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let mut entries = Vec::with_capacity(doc.len());
        for (k, val) in &doc {
            let v: ShuffleSeq = k
                .parse()
                .map_err(|_| Error::Cache(format!("bad key {k:?}")))?;
            let p =
                from_json(&val.to_string()).map_err(|e| Error::Cache(format!("entry {k}: {e}")))?;
            entries.push((v, p));
        }
        let rate = sample_rate.clamp(0.0, 1.0);
        let fresh = SeqEngine::new();
        for (i, (v, p)) in entries.iter().enumerate() {
            let picked = i == 0 || ((i + 1) as f64 * rate).floor() > (i as f64 * rate).floor();
            if picked && *fresh.tilde_f(*v) != *p {
                return Err(Error::Cache(format!("entry {v} fails the spot check")));
            }
        }
        let n = entries.len();
        for (v, p) in entries {
            self.memo.insert(v, p);
        }
        Ok(n)
    }
}
