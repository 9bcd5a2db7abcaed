//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`). The process fails only on a
//! criterion that is not listed in `KNOWN_UNATTAINABLE`; those are still
//! printed as FAIL, with the observed values.

use std::time::{Duration, Instant};

use tlh::closedform::hhh0_series;
use tlh::hilb::{corner_sum_check, magic_rhs, top_a_identity, Partition};
use tlh::linkinv::{
    dataset_get, decategorify, lowest_a_part, matches_up_to_monomial, qt_catalan, sl_n,
    torus2_family,
};
use tlh::polycore::{serialize, series_expand, Format};
use tlh::seqrec::{rule1_redundancy_check, AltEngine, SeqEngine, ShuffleSeq};
use tlh::{FracPoly, Polynomial};

/// Criterion 7 includes the printed claim that the r = 0 tableau sum is 1.
/// Exact evaluation gives (1 + a)^n, so that part cannot pass.
const KNOWN_UNATTAINABLE: &[u32] = &[7];

struct Outcome {
    id: u32,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    notes: Vec<String>,
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("literal parses")
}

fn text(x: &Polynomial) -> String {
    serialize(x, Format::Text)
}

fn criterion(
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce(&mut Vec<String>) -> bool,
) -> Outcome {
    let mut notes = Vec::new();
    let start = Instant::now();
    let passed = body(&mut notes);
    let elapsed = start.elapsed();
    let within = budget.is_none_or(|b| elapsed <= b);
    if !within {
        notes.push(format!(
            "over time budget: {elapsed:.2?} > {:?}",
            budget.unwrap()
        ));
    }
    Outcome {
        id,
        title,
        passed: passed && within,
        elapsed,
        budget,
        notes,
    }
}

fn golden_values(engine: &SeqEngine) -> Outcome {
    criterion(
        1,
        "golden values f~_0, f~_00, f~_000",
        Some(Duration::from_secs(1)),
        |notes| {
            let golden = [
            ("0", p("1 + a")),
            ("00", &p("1 + a") * &p("q + t - q t + a")),
            (
                "000",
                &p("1 + a")
                    * &p("t^3 q^2 + q^3 t^2 - 2 t^2 q^2 - 2 t q^3 - 2 q t^3 + t^3 + q^3 + t q^2 \
                          + q t^2 + t q + t^2 q^2 a - 2 t q^2 a - 2 q t^2 a + t^2 a + q^2 a \
                          + t q a + t a + q a + a^2"),
            ),
        ];
            let mut ok = true;
            for (v, want) in golden {
                let got = engine.tilde_f(v.parse().unwrap());
                if *got != want {
                    notes.push(format!("f~_{v}: observed {got}, expected {want}"));
                    ok = false;
                }
            }
            // the rational forms f_0 = (1+a)/(1-q), f_00 = (1+a)(q+t-qt+a)/(1-q)^2
            ok &= engine.f("0".parse().unwrap()) == FracPoly::over_one_minus_q(p("1 + a"), 1);
            ok &= engine.f("00".parse().unwrap())
                == FracPoly::over_one_minus_q(&p("1 + a") * &p("q + t - q t + a"), 2);
            ok
        },
    )
}

fn dual_recursion(engine: &SeqEngine) -> Outcome {
    criterion(
        2,
        "f_alt(v) = f(v) for all 510 sequences of length <= 8",
        Some(Duration::from_secs(60)),
        |notes| {
            let alt = AltEngine::new();
            let mut count = 0;
            let mut ok = true;
            for len in 1..=8 {
                for v in ShuffleSeq::all_of_length(len) {
                    count += 1;
                    if alt.f_alt(v) != engine.f(v) {
                        notes.push(format!("differs at v = {v}"));
                        ok = false;
                    }
                }
            }
            notes.push(format!("{count} sequences compared"));
            ok && count == 510
        },
    )
}

fn zero_sequences(engine: &SeqEngine) -> Outcome {
    criterion(
        3,
        "f~(0^n) = f~(1 0^(n-1)) and the verbatim rule, n <= 8",
        None,
        |notes| {
            let mut ok = true;
            for n in 1..=8 {
                let zeros = engine.tilde_f(ShuffleSeq::zeros(n));
                let head = engine.tilde_f(ShuffleSeq::zeros(n - 1).push_front(true));
                if zeros != head {
                    notes.push(format!("f~(0^{n}) differs from f~(1 0^{})", n - 1));
                    ok = false;
                }
                if !rule1_redundancy_check(engine, n) {
                    notes.push(format!("verbatim rule fails at n = {n}"));
                    ok = false;
                }
            }
            ok
        },
    )
}

fn top_a(engine: &SeqEngine) -> Outcome {
    criterion(
        4,
        "a^n coefficient of f~(v) is 1, length <= 8",
        None,
        |notes| {
            let mut ok = true;
            for n in 1..=8 {
                for v in ShuffleSeq::all_of_length(n) {
                    let c = engine.tilde_f(v).coeff_of_a(n as i32);
                    if !c.is_one() {
                        notes.push(format!("v = {v}: observed {c}"));
                        ok = false;
                    }
                }
            }
            ok
        },
    )
}

fn closed_form(engine: &SeqEngine) -> Outcome {
    criterion(
        5,
        "closed formula = f(0^n) at a = 0 to q^12, n <= 6",
        Some(Duration::from_secs(120)),
        |notes| {
            let mut ok = true;
            for n in 1..=6 {
                let f = engine.f(ShuffleSeq::zeros(n));
                let at_zero = FracPoly::from_parts(
                    f.numerator().at_a_zero().expect("integral a-degrees"),
                    f.denominator_factors(),
                );
                let expanded =
                    series_expand(&at_zero, 12).expect("denominator is a power of 1 - q");
                let enumerated = hhh0_series(n, 12);
                if expanded != enumerated {
                    notes.push(format!("n = {n}: enumeration and recursion differ"));
                    ok = false;
                } else {
                    notes.push(format!("n = {n}: {} terms match", enumerated.len()));
                }
            }
            ok
        },
    )
}

fn corner_sums() -> Outcome {
    criterion(
        6,
        "corner functions sum to 1 for all |lambda| <= 8",
        None,
        |notes| {
            let mut count = 0;
            let mut ok = true;
            for size in 0..=8 {
                for lambda in Partition::all_of_size(size) {
                    count += 1;
                    if !corner_sum_check(&lambda) {
                        notes.push(format!("fails at {lambda}"));
                        ok = false;
                    }
                }
            }
            notes.push(format!("{count} partitions checked"));
            ok
        },
    )
}

fn magic(engine: &SeqEngine) -> Outcome {
    criterion(
        7,
        "tableau sum: r = 1 equals f~(0^n); r = 0 equals 1; sum f_T = 1; n <= 4",
        Some(Duration::from_secs(120)),
        |notes| {
            let mut r1 = true;
            let mut r0 = true;
            let mut top = true;
            for n in 1..=4 {
                let rhs = magic_rhs(n, 1).to_polynomial();
                if rhs.as_ref().ok() != Some(&*engine.tilde_f(ShuffleSeq::zeros(n))) {
                    notes.push(format!("r = 1, n = {n}: observed {rhs:?}"));
                    r1 = false;
                }
                let zero = magic_rhs(n, 0);
                if zero != FracPoly::one() {
                    notes.push(format!("r = 0, n = {n}: observed {zero}, expected 1"));
                    r0 = false;
                }
                if !top_a_identity(n) {
                    notes.push(format!("sum of f_T differs from 1 at n = {n}"));
                    top = false;
                }
            }
            notes.insert(
                0,
                format!(
                    "r = 1: {}; sum f_T = 1: {}; r = 0 equals 1: {}",
                    verdict(r1),
                    verdict(top),
                    verdict(r0)
                ),
            );
            r1 && r0 && top
        },
    )
}

fn conjectures(engine: &SeqEngine) -> Outcome {
    criterion(
        8,
        "q <-> t symmetry n <= 6; submaximal slice n <= 7",
        None,
        |notes| {
            let mut ok = true;
            for n in 1..=6 {
                let f = engine.tilde_f(ShuffleSeq::zeros(n));
                if f.swap_qt() != *f {
                    notes.push(format!("f~(0^{n}) is not symmetric"));
                    ok = false;
                }
            }
            let base = p("q + t - q t");
            for n in 1..=7u32 {
                let slice = engine
                    .tilde_f(ShuffleSeq::zeros(n as usize))
                    .coeff_of_a(n as i32 - 1);
                // 1 + b + ... + b^(n-1), written out rather than divided
                let progression: Polynomial = (0..n).map(|i| base.pow(i)).sum();
                if slice != progression {
                    notes.push(format!("n = {n}: observed {slice}"));
                    ok = false;
                }
            }
            ok
        },
    )
}

fn specialisations() -> Outcome {
    criterion(
        9,
        "trefoil and T(3,4) HOMFLY / sl_N specialisations",
        None,
        |notes| {
            let mut ok = true;
            let decat = decategorify(&torus2_family(1)).expect("half lattice");
            let want = text(&(&p("-a") * &p("q + q^-1 + a")));
            if text(&decat) != want {
                notes.push(format!(
                    "trefoil decategorification: observed {}",
                    text(&decat)
                ));
                ok = false;
            }
            for n in 1..=6u32 {
                let got = text(&sl_n(&decat, n).expect("integral a"));
                let want = text(&p(&format!("q^{} + q^{} - q^{}", n - 1, n + 1, 2 * n)));
                if got != want {
                    notes.push(format!("trefoil sl_{n}: observed {got}, expected {want}"));
                    ok = false;
                }
            }
            let t34 = dataset_get("T(3,4)").expect("dataset").poly;
            let jones = sl_n(&decategorify(&t34).expect("half lattice"), 2).expect("integral a");
            if text(&jones) != "q^3 + q^5 - q^8" {
                notes.push(format!("T(3,4) sl_2: observed {}", text(&jones)));
                ok = false;
            }
            ok
        },
    )
}

fn catalan() -> Outcome {
    criterion(
        10,
        "lowest a-part of T(n,n+1) is C_n(q,t) up to a monomial, n = 2,3,4",
        None,
        |notes| {
            let mut ok = true;
            for (n, key) in [(2, "T(2,3)"), (3, "T(3,4)"), (4, "T(4,5)")] {
                let (part, _) = lowest_a_part(&dataset_get(key).expect("dataset").poly);
                match matches_up_to_monomial(&part, &qt_catalan(n)) {
                    Some(m) => notes.push(format!("{key}: shift {}", Polynomial::from(m))),
                    None => {
                        notes.push(format!("{key}: observed {part}"));
                        ok = false;
                    }
                }
            }
            ok
        },
    )
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() {
    let engine = SeqEngine::new();
    let outcomes = vec![
        golden_values(&engine),
        dual_recursion(&engine),
        zero_sequences(&engine),
        top_a(&engine),
        closed_form(&engine),
        corner_sums(),
        magic(&engine),
        conjectures(&engine),
        specialisations(),
        catalan(),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let budget = o.budget.map_or(String::new(), |b| format!(" / {b:?}"));
        println!(
            "criterion {:>2}: {}  {}  [{:.2?}{budget}]",
            o.id,
            verdict(o.passed),
            o.title,
            o.elapsed
        );
        for n in &o.notes {
            println!("    {n}");
        }
        if !o.passed && !KNOWN_UNATTAINABLE.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} criteria passed", outcomes.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
