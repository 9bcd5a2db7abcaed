//! Verification suites. Each check is graded THEOREM (a proven identity; a
//! failure is a bug) or CONJECTURE (numerical evidence; failures inside the
//! range already checked in the literature are errors, failures outside it
//! are findings).

use std::fmt::Write as _;

use crate::closedform::{count_sigmas, hhh0_series};
use crate::hilb::{corner_sum_check, f_corner, magic_rhs, top_a_identity, Partition};
use crate::linkinv::{
    dataset_get, dataset_list, decategorify, lowest_a_part, matches_up_to_monomial, qt_catalan,
    reduce_by_unknot, sl_n, torus2_family, unknot_frac,
};
use crate::polycore::format::to_text;
use crate::polycore::{parse, serialize, series_expand, Format, FracPoly, Polynomial};
use crate::seqrec::{rule1_redundancy_check, AltEngine, SeqEngine, ShuffleSeq};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Theorem,
    Conjecture,
}

impl Grade {
    pub fn label(self) -> &'static str {
        match self {
            Grade::Theorem => "THEOREM",
            Grade::Conjecture => "CONJECTURE",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub grade: Grade,
    pub name: String,
    pub passed: bool,
    /// Whether a conjecture check lies inside the range already verified in
    /// the literature. Always true for theorems.
    pub in_verified_range: bool,
    pub detail: String,
}

pub const SUITES: &[&str] = &[
    "recursions",
    "zero-sequences",
    "top-a",
    "closed-form",
    "corner-sum",
    "magic",
    "symmetry",
    "submaximal",
    "appendix",
    "catalan",
];

/// Default size bound per suite.
pub fn default_max_n(suite: &str) -> usize {
    match suite {
        "closed-form" | "symmetry" => 6,
        "magic" => 4,
        "submaximal" => 7,
        _ => 8,
    }
}

/// Shared engines for a verification run.
#[derive(Default)]
pub struct Verifier {
    pub engine: SeqEngine,
    pub alt: AltEngine,
    out: Vec<CheckResult>,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    pub fn with_engine(engine: SeqEngine) -> Self {
        Verifier {
            engine,
            ..Verifier::default()
        }
    }

    fn record(
        &mut self,
        suite: &'static str,
        grade: Grade,
        name: String,
        result: std::result::Result<(), String>,
    ) {
        self.record_ranged(suite, grade, name, true, result);
    }

    fn record_ranged(
        &mut self,
        suite: &'static str,
        grade: Grade,
        name: String,
        in_verified_range: bool,
        result: std::result::Result<(), String>,
    ) {
        let (passed, detail) = match result {
            Ok(()) => (true, String::new()),
            Err(d) => (false, d),
        };
        self.out.push(CheckResult {
            suite,
            grade,
            name,
            passed,
            in_verified_range,
            detail,
        });
    }

    /// Runs one suite (or `all`) and returns its checks.
    pub fn run(&mut self, suite: &str, max_n: Option<usize>) -> Result<Vec<CheckResult>> {
        if suite == "all" {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(self.run(s, max_n)?);
            }
            return Ok(all);
        }
        let n = max_n.unwrap_or_else(|| default_max_n(suite));
        let start = self.out.len();
        match suite {
            "recursions" => self.recursions(n),
            "zero-sequences" => self.zero_sequences(n),
            "top-a" => self.top_a(n),
            "closed-form" => self.closed_form(n, 12),
            "corner-sum" => self.corner_sum(n),
            "magic" => self.magic(n),
            "symmetry" => self.symmetry(n),
            "submaximal" => self.submaximal(n),
            "appendix" => self.appendix(),
            "catalan" => self.catalan(n.min(6)),
            _ => return Err(Error::parse(0, format!("unknown suite {suite:?}"))),
        }
        Ok(self.out.split_off(start))
    }

    fn tilde(&self, v: ShuffleSeq) -> Polynomial {
        (*self.engine.tilde_f(v)).clone()
    }

    fn recursions(&mut self, max_n: usize) {
        let p = |s: &str| -> Polynomial { s.parse().expect("literal") };
        let golden = [
            ("0", p("1 + a")),
            ("00", &p("1 + a") * &p("q + t - q t + a")),
            ("000", &p("1 + a") * &p(F000_BODY)),
        ];
        for (v, expected) in golden {
            let got = self.tilde(v.parse().expect("literal"));
            self.record(
                "recursions",
                Grade::Theorem,
                format!("golden value of f~_{v}"),
                expect_eq(&got, &expected),
            );
        }
        for len in 1..=max_n {
            let mut bad = None;
            let mut normalisation = None;
            for v in ShuffleSeq::all_of_length(len) {
                let f = self.engine.f(v);
                if self.alt.f_alt(v) != f {
                    bad.get_or_insert(v);
                }
                let one_minus_q = &Polynomial::one() - &Polynomial::q();
                let scaled = f.mul_poly(&one_minus_q.pow(v.count_zeros() as u32));
                if scaled.to_polynomial().ok().as_ref() != Some(&*self.engine.tilde_f(v)) {
                    normalisation.get_or_insert(v);
                }
            }
            self.record(
                "recursions",
                Grade::Theorem,
                format!(
                    "f_alt(v) = f(v) for all {} sequences of length {len}",
                    1u64 << len
                ),
                bad.map_or(Ok(()), |v| Err(format!("differs at v = {v}"))),
            );
            self.record(
                "recursions",
                Grade::Theorem,
                format!("(1-q)^k f(v) = f~(v) for all v of length {len}"),
                normalisation.map_or(Ok(()), |v| Err(format!("differs at v = {v}"))),
            );
        }
    }

    fn zero_sequences(&mut self, max_n: usize) {
        for n in 1..=max_n {
            let zeros = self.tilde(ShuffleSeq::zeros(n));
            let head = self.tilde(ShuffleSeq::zeros(n - 1).push_front(true));
            self.record(
                "zero-sequences",
                Grade::Theorem,
                format!("f~(0^{n}) = f~(1 0^{})", n - 1),
                expect_eq(&zeros, &head),
            );
            let ok = rule1_redundancy_check(&self.engine, n);
            self.record(
                "zero-sequences",
                Grade::Theorem,
                format!("verbatim alternate rule at 0^{n}"),
                if ok {
                    Ok(())
                } else {
                    Err("identity fails".into())
                },
            );
        }
    }

    fn top_a(&mut self, max_n: usize) {
        for len in 1..=max_n {
            let bad = ShuffleSeq::all_of_length(len)
                .find(|&v| !self.engine.tilde_f(v).coeff_of_a(len as i32).is_one());
            self.record(
                "top-a",
                Grade::Theorem,
                format!("a^{len} coefficient of f~(v) is 1 for all v of length {len}"),
                bad.map_or(Ok(()), |v| Err(format!("fails at v = {v}"))),
            );
        }
    }

    fn closed_form(&mut self, max_n: usize, qmax: u32) {
        for n in 1..=max_n {
            let f = self.engine.f(ShuffleSeq::zeros(n));
            let result = f
                .numerator()
                .at_a_zero()
                .map(|num| FracPoly::from_parts(num, f.denominator_factors()))
                .and_then(|g| series_expand(&g, qmax))
                .map_err(|e| e.to_string())
                .and_then(|expanded| expect_eq(&hhh0_series(n, qmax), &expanded));
            self.record(
                "closed-form",
                Grade::Theorem,
                format!("closed formula = f(0^{n}) at a = 0 to q^{qmax}"),
                result,
            );
        }
        let big = hhh0_series(3, qmax);
        let monotone = (0..qmax).all(|m| hhh0_series(3, m) == big.truncate_q(m as i32 * 4));
        self.record(
            "closed-form",
            Grade::Theorem,
            format!("truncations of the n = 3 series agree below q^{qmax}"),
            if monotone {
                Ok(())
            } else {
                Err("truncation changed earlier terms".into())
            },
        );
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        let bad =
            (1..=max_n).find(|&n| count_sigmas(n, qmax) != binom(qmax as u64 + n as u64, n as u64));
        self.record(
            "closed-form",
            Grade::Theorem,
            format!("number of sigma with sum <= {qmax} is C({qmax}+n, n)"),
            bad.map_or(Ok(()), |n| Err(format!("count differs at n = {n}"))),
        );
    }

    fn corner_sum(&mut self, max_n: usize) {
        for size in 0..=max_n as u32 {
            let parts = Partition::all_of_size(size);
            let bad = parts.iter().find(|l| !corner_sum_check(l));
            self.record(
                "corner-sum",
                Grade::Theorem,
                format!(
                    "corner functions sum to 1 for all {} partitions of {size}",
                    parts.len()
                ),
                bad.map_or(Ok(()), |l| Err(format!("fails at {l}"))),
            );
            let bad = parts.iter().find(|l| {
                l.inner_corners().len() != l.outer_corners().len() + 1
                    || l.z().swap_qt() != l.transpose().z()
            });
            self.record(
                "corner-sum",
                Grade::Theorem,
                format!("|In| = |Out| + 1 and z transposes, partitions of {size}"),
                bad.map_or(Ok(()), |l| Err(format!("fails at {l}"))),
            );
            if size <= 6 {
                let bad = parts.iter().find(|l| {
                    l.inner_corners().into_iter().any(|c| {
                        f_corner(l, c).expect("inner").swap_qt()
                            != f_corner(&l.transpose(), c.transpose()).expect("inner")
                    })
                });
                self.record(
                    "corner-sum",
                    Grade::Theorem,
                    format!("f_(l,c)(q,t) = f_(l^t,c^t)(t,q), partitions of {size}"),
                    bad.map_or(Ok(()), |l| Err(format!("fails at {l}"))),
                );
            }
        }
    }

    fn magic(&mut self, max_n: usize) {
        for n in 1..=max_n {
            let rhs = magic_rhs(n, 1);
            let result = rhs
                .to_polynomial()
                .map_err(|e| e.to_string())
                .and_then(|p| expect_eq(&p, &self.tilde(ShuffleSeq::zeros(n))));
            self.record_ranged(
                "magic",
                Grade::Conjecture,
                format!("tableau sum at r = 1 equals f~(0^{n})"),
                n <= 4,
                result,
            );
            for r in 0..=2 {
                let x = if r == 1 { rhs.clone() } else { magic_rhs(n, r) };
                self.record(
                    "magic",
                    Grade::Theorem,
                    format!("tableau sum n = {n}, r = {r} is q,t symmetric"),
                    if x.swap_qt() == x {
                        Ok(())
                    } else {
                        Err("not symmetric".into())
                    },
                );
            }
            self.record(
                "magic",
                Grade::Theorem,
                format!("sum of f_T over tableaux of size {n} is 1"),
                if top_a_identity(n) {
                    Ok(())
                } else {
                    Err("sum differs from 1".into())
                },
            );
            let r0 = magic_rhs(n, 0);
            let unlink = FracPoly::from((&Polynomial::one() + &Polynomial::a()).pow(n as u32));
            self.record_ranged(
                "magic",
                Grade::Conjecture,
                format!("tableau sum n = {n}, r = 0 equals 1 (as printed)"),
                false,
                if r0 == FracPoly::one() {
                    Ok(())
                } else {
                    Err(format!("observed {r0}"))
                },
            );
            self.record_ranged(
                "magic",
                Grade::Conjecture,
                format!("tableau sum n = {n}, r = 0 equals (1 + a)^{n} (unlink)"),
                false,
                if r0 == unlink {
                    Ok(())
                } else {
                    Err(format!("observed {r0}"))
                },
            );
        }
    }

    fn symmetry(&mut self, max_n: usize) {
        for n in 1..=max_n {
            let p = self.tilde(ShuffleSeq::zeros(n));
            self.record_ranged(
                "symmetry",
                Grade::Conjecture,
                format!("f~(0^{n}) is symmetric under q <-> t"),
                n <= 6,
                expect_eq(&p.swap_qt(), &p),
            );
        }
    }

    fn submaximal(&mut self, max_n: usize) {
        let base = crate::polycore::parse("q + t - q t", Format::Text).expect("literal");
        for n in 1..=max_n {
            let slice = self.tilde(ShuffleSeq::zeros(n)).coeff_of_a(n as i32 - 1);
            let num = &Polynomial::one() - &base.pow(n as u32);
            let den =
                &(&Polynomial::one() - &Polynomial::q()) * &(&Polynomial::one() - &Polynomial::t());
            let result = num
                .exact_div(&den)
                .map_err(|e| e.to_string())
                .and_then(|g| expect_eq(&slice, &g));
            self.record_ranged(
                "submaximal",
                Grade::Conjecture,
                format!("a^{} part of f~(0^{n}) is the geometric progression", n - 1),
                n <= 7,
                result,
            );
        }
    }

    fn appendix(&mut self) {
        let trefoil = torus2_family(1);
        let decat = decategorify(&trefoil);
        let expected: Polynomial = "-a q - a q^-1 - a^2".parse().expect("literal");
        self.record(
            "appendix",
            Grade::Theorem,
            "trefoil decategorification is -a(q + q^-1 + a)".into(),
            decat
                .as_ref()
                .map_err(|e| e.to_string())
                .and_then(|d| expect_text(d, &expected)),
        );
        if let Ok(d) = &decat {
            let bad = (1..=8u32).find(|&n| {
                let want: Polynomial = format!("q^{} + q^{} - q^{}", n - 1, n + 1, 2 * n)
                    .parse()
                    .expect("literal");
                sl_n(d, n).ok() != Some(want)
            });
            self.record(
                "appendix",
                Grade::Theorem,
                "trefoil sl_N is q^(N-1) + q^(N+1) - q^(2N), N = 1..8".into(),
                bad.map_or(Ok(()), |n| Err(format!("fails at N = {n}"))),
            );
        }
        let t34 = dataset_get("T(3,4)").expect("dataset").poly;
        let jones = decategorify(&t34).and_then(|d| sl_n(&d, 2));
        self.record(
            "appendix",
            Grade::Theorem,
            "T(3,4) sl_2 specialisation is q^3 + q^5 - q^8".into(),
            jones.map_err(|e| e.to_string()).and_then(|j| {
                if to_text(&j) == "q^3 + q^5 - q^8" {
                    Ok(())
                } else {
                    Err(format!("observed {j}"))
                }
            }),
        );
        let bad = (1..=4u32).find(|&k| {
            let Ok(j) = decategorify(&torus2_family(k)).and_then(|d| sl_n(&d, 2)) else {
                return true;
            };
            let top_ok = j.lead().is_some_and(|(_, c)| *c == (-1).into());
            let span_ok = j
                .span(|e| e.q)
                .is_some_and(|(lo, hi)| hi - lo == 4 * (2 * k as i32 + 1));
            !(top_ok && span_ok)
        });
        self.record(
            "appendix",
            Grade::Theorem,
            "T(2,2k+1) sl_2: top coefficient -1, q-span 2k+1, k <= 4".into(),
            bad.map_or(Ok(()), |k| Err(format!("fails at k = {k}"))),
        );
        for e in dataset_list() {
            let sym = e.poly.swap_qt() == e.poly;
            let round = [Format::Text, Format::Json]
                .into_iter()
                .all(|f| parse(&serialize(&e.poly, f), f).ok().as_ref() == Some(&e.poly));
            let reduce = reduce_by_unknot(&unknot_frac().mul_poly(&e.poly))
                .ok()
                .as_ref()
                == Some(&e.poly);
            self.record(
                "appendix",
                Grade::Theorem,
                format!(
                    "{}: q <-> t symmetric, serialization round trip, unknot reduction",
                    e.key
                ),
                match (sym, round, reduce) {
                    (true, true, true) => Ok(()),
                    (false, _, _) => Err("not symmetric".into()),
                    (_, false, _) => Err("round trip differs".into()),
                    _ => Err("unknot reduction differs".into()),
                },
            );
        }
    }

    fn catalan(&mut self, max_n: usize) {
        for n in 1..=max_n {
            let c = qt_catalan(n);
            self.record(
                "catalan",
                Grade::Theorem,
                format!("C_{n}(q,t) is q <-> t symmetric"),
                expect_eq(&c.swap_qt(), &c),
            );
        }
        for (n, key) in [(2, "T(2,3)"), (3, "T(3,4)"), (4, "T(4,5)")] {
            let (part, _) = lowest_a_part(&dataset_get(key).expect("dataset").poly);
            self.record(
                "catalan",
                Grade::Theorem,
                format!("lowest a-part of {key} is C_{n}(q,t) up to a monomial"),
                matches_up_to_monomial(&part, &qt_catalan(n))
                    .map(|_| ())
                    .ok_or_else(|| format!("observed {part}")),
            );
        }
    }
}

const F000_BODY: &str =
    "t^3 q^2 + q^3 t^2 - 2 t^2 q^2 - 2 t q^3 - 2 q t^3 + t^3 + q^3 + t q^2 + q t^2 + t q \
    + t^2 q^2 a - 2 t q^2 a - 2 q t^2 a + t^2 a + q^2 a + t q a + t a + q a + a^2";

fn expect_eq(got: &Polynomial, want: &Polynomial) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("observed {got}, expected {want}"))
    }
}

fn expect_text(got: &Polynomial, want: &Polynomial) -> std::result::Result<(), String> {
    if serialize(got, Format::Text) == serialize(want, Format::Text) {
        Ok(())
    } else {
        Err(format!("observed {got}, expected {want}"))
    }
}

/// Whether a run counts as passing: every theorem and every in-range
/// conjecture passes, and out-of-range conjecture failures are tolerated only
/// when `conjecture_soft` is set.
pub fn all_passed(results: &[CheckResult], conjecture_soft: bool) -> bool {
    results.iter().all(|r| {
        r.passed || (r.grade == Grade::Conjecture && !r.in_verified_range && conjecture_soft)
    })
}

pub fn render_table(results: &[CheckResult]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<15} {:<11} {:<7} CHECK", "SUITE", "GRADE", "RESULT");
    for r in results {
        let status = match (r.passed, r.grade, r.in_verified_range) {
            (true, _, _) => "PASS",
            (false, Grade::Conjecture, false) => "FINDING",
            (false, _, _) => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<15} {:<11} {:<7} {}",
            r.suite,
            r.grade.label(),
            status,
            r.name
        );
        if !r.passed {
            let _ = writeln!(out, "{:<35} {}", "", r.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(
        out,
        "{} checks, {} passed, {} not passed",
        results.len(),
        results.len() - failed,
        failed
    );
    out
}
