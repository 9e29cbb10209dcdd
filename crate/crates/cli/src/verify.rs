use std::ops::RangeInclusive;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use skeinlab::algebra::{delta_color, EvalPoint, LaurentPoly, RatFunc, Sign, Q};
use skeinlab::bracket::{
    bracket_state_sum, bracket_tangle_sweep, colored_bracket_generic, jones_wenzl, tl_closure, tl_compose,
    TLDiagram, TLElement,
};
use skeinlab::diagrams::{braid_closure, hopf_fixture, unknot_fixture, ColoredLink, FramedLink, PlanarDiagram, SurgeryPresentation};
use skeinlab::recoupling::{hopf_eval, meridian_eigenvalue, meridian_series, omega_data};
use skeinlab::wrt::{
    f_mobius, independence_certificate, recolor_check, torus_invariant, value_matches, wrt_invariant, ArithMode,
    Value, FLOAT_TOLERANCE,
};

use crate::config::Config;
use crate::error::Result;

const F_TOLERANCE: f64 = 1e-12;
const RANDOM_DIAGRAMS: usize = 500;
const RANDOM_MAX_CROSSINGS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One line of the verification report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// The statement being checked.
    pub anchor: &'static str,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerifyReport {
    fn new(checks: Vec<CheckRecord>) -> Self {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

struct Checks {
    cfg: Config,
    out: Vec<CheckRecord>,
}

impl Checks {
    fn push(&mut self, id: impl Into<String>, anchor: &'static str, expected: impl Into<String>, got: String, ok: bool) {
        self.out.push(CheckRecord {
            id: id.into(),
            anchor,
            expected: expected.into(),
            got,
            status: if ok { Status::Pass } else { Status::Fail },
        });
    }

    fn push_error(&mut self, id: impl Into<String>, anchor: &'static str, expected: impl Into<String>, e: skeinlab::Error) {
        let status = match e {
            skeinlab::Error::EtaOddPower(_) => Status::Skipped,
            _ => Status::Fail,
        };
        self.out.push(CheckRecord {
            id: id.into(),
            anchor,
            expected: expected.into(),
            got: format!("{}: {e}", e.code()),
            status,
        });
    }

    /// Runs `f` at both signs of every level of `range` (clipped to the
    /// window) and records the first disagreement.
    fn over_points<F>(&mut self, id: &str, anchor: &'static str, expected: &str, range: RangeInclusive<u32>, f: F)
    where
        F: Fn(EvalPoint) -> std::result::Result<(), String>,
    {
        let range = self.cfg.clip(range);
        if range.is_empty() {
            return;
        }
        let first_failure = range
            .clone()
            .flat_map(|d| Sign::BOTH.map(|s| EvalPoint::new(d, s)))
            .find_map(|p| f(p).err().map(|msg| format!("{msg} at {p}")));
        let span = format!("d={}..{}, both signs", range.start(), range.end());
        match first_failure {
            None => self.push(id, anchor, expected, format!("{expected} for {span}"), true),
            Some(msg) => self.push(id, anchor, expected, msg, false),
        }
    }
}

fn rational_is(x: &skeinlab::algebra::CycloNum, n: i64) -> std::result::Result<(), String> {
    if x.is_rational_eq(&Q::from_integer(n.into())) {
        Ok(())
    } else {
        Err(format!("got {}", Value::Exact(x.clone())))
    }
}

/// Runs every check and collects the report.
pub fn cmd_verify_paper(cfg: &Config) -> Result<VerifyReport> {
    cfg.validate()?;
    let mut c = Checks {
        cfg: cfg.clone(),
        out: Vec::new(),
    };
    closed_forms(&mut c);
    pipeline(&mut c);
    normalization(&mut c);
    analytic(&mut c);
    oracles(&mut c);
    Ok(VerifyReport::new(c.out))
}

fn closed_forms(c: &mut Checks) {
    c.over_points("series-color-1", "the sum over colors with a 1-colored circle is one", "1", 1..=50, |p| {
        rational_is(&meridian_series(1, p), 1)
    });
    c.over_points("series-color-0", "the empty torus has dimension d", "d", 1..=50, |p| {
        rational_is(&meridian_series(0, p), p.d as i64)
    });
    c.over_points("series-color-2", "a 2-colored circle gives d - 1", "d - 1", 1..=50, |p| {
        rational_is(&meridian_series(2, p), p.d as i64 - 1)
    });

    let ok = (0..=30u32).all(|i| {
        let m = 2 * i as i64 + 2;
        hopf_eval(i, 1) == &delta_color(i as usize) * &LaurentPoly::from_int_terms([(m, -1), (-m, -1)])
    });
    c.push(
        "hopf-eigenvalue",
        "H(i,1) = delta_i (-A^(2i+2) - A^(-2i-2))",
        "identity for i=0..30",
        if ok { "identity for i=0..30".into() } else { "identity fails".into() },
        ok,
    );

    c.over_points("recolor", "recoloring 1 by 2d-2 leaves the value 1", "1", 2..=25, |p| {
        match recolor_check(p) {
            Some(true) => Ok(()),
            other => Err(format!("check returned {other:?}")),
        }
    });

    let range = c.cfg.clip(1..=20);
    if range.start() < range.end() {
        let mut bad = None;
        let mut pairs = 0;
        'outer: for d1 in range.clone() {
            for d2 in d1 + 1..=*range.end() {
                pairs += 1;
                match independence_certificate(d1, d2) {
                    Ok(cert) if cert.determinant == (d2 - d1) as i64 && cert.independent => {}
                    Ok(cert) => {
                        bad = Some(format!("determinant {} at ({d1},{d2})", cert.determinant));
                        break 'outer;
                    }
                    Err(e) => {
                        bad = Some(format!("{}: {e}", e.code()));
                        break 'outer;
                    }
                }
            }
        }
        let expected = "determinant d2 - d1";
        match bad {
            None => c.push("independence", "the empty and 2-colored functions are independent", expected, format!("{expected} for all {pairs} pairs in d={}..{}", range.start(), range.end()), true),
            Some(msg) => c.push("independence", "the empty and 2-colored functions are independent", expected, msg, false),
        }
    }
}

fn pipeline(c: &mut Checks) {
    let mode = c.cfg.mode.unwrap_or(ArithMode::Exact);
    for d in c.cfg.clip(2..=3) {
        for sign in Sign::BOTH {
            let p = EvalPoint::new(d, sign);
            for a in 0..=2 {
                let id = format!("torus-pipeline-a{a}-d{d}{}", sign.symbol());
                let anchor = "surgery on the Borromean rings reproduces the closed forms";
                let want = meridian_series(a, p);
                let expected = Value::Exact(want.clone()).to_string();
                match torus_invariant(a, p, mode) {
                    Ok(v) => {
                        let ok = match &v {
                            Value::Exact(x) => *x == want,
                            Value::Float(_) => (v.to_c64() - Value::Exact(want).to_c64()).norm() <= FLOAT_TOLERANCE,
                        };
                        c.push(id, anchor, expected, v.to_string(), ok);
                    }
                    Err(e) => c.push_error(id, anchor, expected, e),
                }
            }
        }
    }
}

fn normalization(c: &mut Checks) {
    let mode = c.cfg.mode.unwrap_or(ArithMode::Float);
    let s1s2 = SurgeryPresentation::surgery_only("S1 x S2", unknot_fixture(0));
    for d in c.cfg.clip(2..=5) {
        for sign in Sign::BOTH {
            let p = EvalPoint::new(d, sign);
            let id = format!("s1xs2-d{d}{}", sign.symbol());
            let anchor = "the 0-framed unknot gives S1 x S2 with invariant 1";
            match wrt_invariant(&s1s2, p, mode) {
                Ok(v) => {
                    let ok = value_matches(&v, &Q::from_integer(1.into()), FLOAT_TOLERANCE);
                    c.push(id, anchor, "1", short(&v), ok);
                }
                Err(e) => c.push_error(id, anchor, "1", e),
            }
        }
    }

    let mode = c.cfg.mode.unwrap_or(ArithMode::Auto);
    let s3 = SurgeryPresentation::surgery_only("3-sphere", hopf_fixture());
    for d in c.cfg.clip(2..=5) {
        let p = EvalPoint::plus(d);
        let id = format!("s3-hopf-d{d}");
        let anchor = "the 0-framed Hopf link gives the 3-sphere with invariant eta";
        let eta = omega_data(d).eta_f64();
        let expected = format!("{eta:.15}");
        match wrt_invariant(&s3, p, mode) {
            Ok(v) => {
                let ok = (v.to_c64() - Complex64::new(eta, 0.0)).norm() <= FLOAT_TOLERANCE;
                c.push(id, anchor, expected, short(&v), ok);
            }
            Err(e) => c.push_error(id, anchor, expected, e),
        }
    }
}

fn short(v: &Value) -> String {
    match v {
        Value::Exact(_) => v.to_string(),
        Value::Float(z) => format!("{:.15} + {:.15}i", z.re, z.im.abs()),
    }
}

fn analytic(c: &mut Checks) {
    for sign in Sign::BOTH {
        let range = c.cfg.clip(1..=1000);
        if range.is_empty() {
            break;
        }
        let worst = range
            .clone()
            .map(|d| {
                let p = EvalPoint::new(d, sign);
                let angle = sign.as_i64() as f64 * std::f64::consts::PI / p.level() as f64;
                let d = d as f64;
                let want = match sign {
                    Sign::Plus => (d - 1.0) / d,
                    Sign::Minus => (d + 2.0) / (d + 1.0),
                };
                match f_mobius(Complex64::from_polar(1.0, angle)) {
                    Ok(z) => (z - Complex64::new(want, 0.0)).norm(),
                    Err(_) => f64::INFINITY,
                }
            })
            .fold(0.0f64, f64::max);
        let (id, expected) = match sign {
            Sign::Plus => ("f-plus", "(d-1)/d within 1e-12"),
            Sign::Minus => ("f-minus", "(d+2)/(d+1) within 1e-12"),
        };
        c.push(
            id,
            "f at exp(+-pi i/(2d+1))",
            expected,
            format!("max error {worst:.1e} over d={}..{}", range.start(), range.end()),
            worst < F_TOLERANCE,
        );
    }
    let one = f_mobius(Complex64::new(1.0, 0.0));
    let ok = matches!(one, Ok(z) if z == Complex64::new(1.0, 0.0));
    c.push("f-one", "f(1) = 1", "1", format!("{one:?}"), ok);
}

/// A random closed braid with random crossing types.
fn random_diagram(rng: &mut ChaCha8Rng) -> PlanarDiagram {
    let strands = rng.gen_range(1..=5);
    let len = if strands == 1 { 0 } else { rng.gen_range(0..=RANDOM_MAX_CROSSINGS) };
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid_closure(strands, &word).expect("braid words close up")
}

fn colored(link: FramedLink, colors: &[u32]) -> ColoredLink {
    ColoredLink::new(link, colors.to_vec()).expect("color count matches")
}

fn oracles(c: &mut Checks) {
    let examples = [
        ("unknot", unknot_fixture(0).diagram().clone(), "-A^2 - A^-2"),
        ("empty", PlanarDiagram::empty(), "1"),
        ("hopf", hopf_fixture().diagram().clone(), "A^6 + A^2 + A^-2 + A^-6"),
    ];
    for (name, diagram, want) in examples {
        let got = bracket_tangle_sweep(&diagram).map_or_else(|e| e.code().to_string(), |v| v.to_string());
        let ok = got == want;
        c.push(format!("bracket-{name}"), "bracket of a small diagram", want, got, ok);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut mismatch = None;
    for k in 0..RANDOM_DIAGRAMS {
        let d = random_diagram(&mut rng);
        let (a, b) = (bracket_tangle_sweep(&d), bracket_state_sum(&d));
        if a.is_err() || a.ok() != b.ok() {
            mismatch = Some(k);
            break;
        }
    }
    let expected = format!("sweep equals state sum on {RANDOM_DIAGRAMS} diagrams");
    let got = match mismatch {
        None => expected.clone(),
        Some(k) => format!("mismatch on diagram {k}"),
    };
    c.push("sweep-oracle", "tangle sweep agrees with the state sum", expected, got, mismatch.is_none());

    let mut bad = None;
    for n in 1..=6 {
        let ok = (|| -> skeinlab::Result<bool> {
            let p = jones_wenzl(n)?;
            let mut ok = tl_compose(&p, &p)? == *p;
            for i in 1..n {
                let u = TLElement::from_diagram(TLDiagram::generator(n, i)?);
                ok &= tl_compose(&p, &u)?.is_empty() && tl_compose(&u, &p)?.is_empty();
            }
            Ok(ok && tl_closure(&p)? == RatFunc::from_poly(delta_color(n)))
        })();
        if !matches!(ok, Ok(true)) {
            bad = Some(n);
            break;
        }
    }
    let expected = "idempotent, killed by cups and caps, closure delta_n, n <= 6";
    let got = bad.map_or(expected.to_string(), |n| format!("fails at n={n}"));
    c.push("jones-wenzl", "projector identities", expected, got, bad.is_none());

    let bad = (0..=5u32).find(|&n| {
        colored_bracket_generic(&colored(unknot_fixture(0), &[n])).ok() != Some(RatFunc::from_poly(delta_color(n as usize)))
    });
    let expected = "delta_n for n <= 5";
    let got = bad.map_or(expected.to_string(), |n| format!("fails at n={n}"));
    c.push("colored-unknot", "the n-colored unknot is delta_n", expected, got, bad.is_none());

    let pairs: Vec<(u32, u32)> = (0..=2).flat_map(|i| (0..=2).map(move |a| (i, a))).collect();
    let bad = pairs.iter().find(|&&(i, a)| {
        colored_bracket_generic(&colored(hopf_fixture(), &[i, a])).ok() != Some(RatFunc::from_poly(hopf_eval(i, a)))
    });
    let expected = "(-1)^(i+a) [(i+1)(a+1)] for colors <= 2";
    let got = bad.map_or(expected.to_string(), |(i, a)| format!("fails at ({i},{a})"));
    c.push("colored-hopf", "colored Hopf link closed form", expected, got, bad.is_none());

    let (link, _) = unknot_fixture(0).with_meridian(0).expect("the unknot has a component");
    let bad = pairs.iter().find(|&&(i, a)| {
        let Ok(v) = colored_bracket_generic(&colored(link.clone(), &[i, a])) else {
            return true;
        };
        let delta = RatFunc::from_poly(delta_color(i as usize));
        v.checked_div(&delta).ok() != Some(meridian_eigenvalue(i, a))
    });
    let expected = "H(i,a)/delta_i for colors <= 2";
    let got = bad.map_or(expected.to_string(), |(i, a)| format!("fails at ({i},{a})"));
    c.push("encirclement", "a colored meridian acts by a scalar", expected, got, bad.is_none());
}
