//! Command implementations behind the `dioph` binary.
//!
//! Every command produces an [`OutputRecord`]:
//!
//! ```json
//! {"schema_version": "1", "command": "...", "n": "...", "payload": {"kind": "...", ...}}
//! ```
//!
//! All numbers are emitted as decimal strings (`"5/2"` for rationals) and all
//! lists are in a fixed order, so identical invocations print identical
//! bytes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::arith::exact_sqrt;
use crate::oracle::{check_equivalence, Mismatch, Mode};
use crate::quadratic::{
    enumerate_integer, families, mod4_filter, rational_point, FamilyDescriptor, Mod4Obstruction,
    RationalPointParams, Sign,
};
use crate::quartic::{
    decide_integer, enumerate_nonneg, expand_orbit, rational_witness, solution_orbits,
    square_one_zero_rational, unit_case, Certificate, SolutionOrbit,
};
use crate::{require_at_least, Error, Integer, Rational, Result, Triple};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Precondition(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    /// The `n` the command ran on; absent for range commands.
    pub n: Option<String>,
    pub payload: Payload,
}

impl OutputRecord {
    fn new(command: &str, n: Option<&Integer>, payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            n: n.map(|n| n.to_string()),
            payload,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Certificate(DecidePayload),
    Solutions(SolvePayload),
    Witness(RationalPayload),
    QuadFamilies(QuadIntegerPayload),
    QuadPoint(QuadRationalPayload),
    Report(VerifyPayload),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecidePayload {
    #[serde(flatten)]
    pub certificate: Certificate,
    pub witness_triple: Option<Triple<Integer>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub canonical: Triple<Integer>,
    pub size: usize,
    pub members: Vec<Triple<Integer>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvePayload {
    /// Nonnegative solutions, lexicographic.
    pub nonnegative: Vec<Triple<Integer>>,
    /// Number of integer solutions of any sign.
    pub total: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbits: Option<Vec<OrbitEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "from", rename_all = "snake_case")]
pub enum RationalSource {
    /// `a·b·c·d = n`, `a + d = b + c`.
    Quadruple {
        #[serde(with = "crate::exact")]
        a: Integer,
        #[serde(with = "crate::exact")]
        b: Integer,
        #[serde(with = "crate::exact")]
        c: Integer,
        #[serde(with = "crate::exact")]
        d: Integer,
    },
    /// One-zero family for `n = k²`, `k ≥ 2`.
    OneZeroFamily {
        #[serde(with = "crate::exact")]
        k1: Integer,
        #[serde(with = "crate::exact")]
        k2: Integer,
        #[serde(with = "crate::exact")]
        m1: Integer,
        #[serde(with = "crate::exact")]
        m2: Integer,
    },
    /// One-zero family for `n = 1`.
    UnitFamily {
        #[serde(with = "crate::exact")]
        k1: Integer,
        #[serde(with = "crate::exact")]
        k2: Integer,
    },
}

pub const NO_WITNESS: &str =
    "no divisor-quadruple witness found; this does not rule out rational solutions";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPayload {
    pub found: bool,
    pub triple: Option<Triple<Rational>>,
    pub source: Option<RationalSource>,
    /// Number of distinct signed permutations of `triple`.
    pub orbit_size: Option<usize>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadIntegerPayload {
    #[serde(with = "crate::exact")]
    pub bound: Integer,
    pub obstruction: Option<Mod4Obstruction>,
    pub families: Vec<FamilyDescriptor>,
    pub solutions: Vec<Triple<Integer>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadRationalPayload {
    pub params: RationalPointParams,
    pub point: Triple<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub mode: Mode,
    pub start: u64,
    pub end: u64,
    #[serde(rename = "box")]
    pub bound: Option<u64>,
    pub checked: u64,
    pub nonempty: usize,
    pub mismatches: Vec<Mismatch>,
}

pub fn cmd_decide(n: &Integer) -> Result<OutputRecord> {
    let certificate = decide_integer(n)?;
    let witness_triple = certificate.witness_triple();
    Ok(OutputRecord::new(
        "decide",
        Some(n),
        Payload::Certificate(DecidePayload {
            certificate,
            witness_triple,
        }),
    ))
}

pub fn cmd_solve(n: &Integer, with_orbits: bool) -> Result<OutputRecord> {
    let nonnegative: Vec<_> = enumerate_nonneg(n)?.into_iter().collect();
    let orbits = solution_orbits(n)?;
    let total = orbits.iter().map(|o| o.size).sum();
    let orbits = with_orbits.then(|| {
        orbits
            .into_iter()
            .map(|o: SolutionOrbit| OrbitEntry {
                members: o.members().into_iter().collect(),
                canonical: o.canonical,
                size: o.size,
            })
            .collect()
    });
    Ok(OutputRecord::new(
        "solve",
        Some(n),
        Payload::Solutions(SolvePayload {
            nonnegative,
            total,
            orbits,
        }),
    ))
}

fn found(triple: Triple<Rational>, source: RationalSource) -> RationalPayload {
    RationalPayload {
        orbit_size: Some(expand_orbit(&triple).len()),
        found: true,
        triple: Some(triple),
        source: Some(source),
        note: None,
    }
}

/// A rational solution from a divisor quadruple, falling back to the
/// one-zero families when `n` is a square.
pub fn cmd_rational(n: &Integer) -> Result<OutputRecord> {
    let payload = if let Some(w) = rational_witness(n)? {
        found(
            w.triple,
            RationalSource::Quadruple {
                a: w.a,
                b: w.b,
                c: w.c,
                d: w.d,
            },
        )
    } else if let Some(k) = exact_sqrt(n).filter(|k| *k >= Integer::from(2)) {
        let one = Integer::from(1);
        let fam = square_one_zero_rational(&k, &k, &one, &one, &one)?;
        found(
            fam.placements[0].clone(),
            RationalSource::OneZeroFamily {
                k1: k,
                k2: one.clone(),
                m1: one.clone(),
                m2: one,
            },
        )
    } else if *n == Integer::from(1) {
        let (k1, k2) = (Integer::from(2), Integer::from(1));
        let fam = unit_case(&k1, &k2)?;
        found(
            fam.classes[0].clone(),
            RationalSource::UnitFamily { k1, k2 },
        )
    } else {
        RationalPayload {
            found: false,
            triple: None,
            source: None,
            orbit_size: None,
            note: Some(NO_WITNESS.to_string()),
        }
    };
    Ok(OutputRecord::new(
        "rational",
        Some(n),
        Payload::Witness(payload),
    ))
}

pub fn cmd_quad_integer(n: &Integer, bound: &Integer) -> Result<OutputRecord> {
    require_at_least("bound", bound, 1)?;
    let payload = QuadIntegerPayload {
        bound: bound.clone(),
        obstruction: mod4_filter(n)?,
        families: families(n)?,
        solutions: enumerate_integer(n, bound)?.into_iter().collect(),
    };
    Ok(OutputRecord::new(
        "quad",
        Some(n),
        Payload::QuadFamilies(payload),
    ))
}

pub fn cmd_quad_rational(n: &Integer, params: RationalPointParams) -> Result<OutputRecord> {
    let point = rational_point(n, &params)?;
    Ok(OutputRecord::new(
        "quad",
        Some(n),
        Payload::QuadPoint(QuadRationalPayload { params, point }),
    ))
}

/// Runs the oracle comparison. The second value is `true` when there were
/// no mismatches.
pub fn cmd_verify(
    range: RangeInclusive<u64>,
    mode: Mode,
    bound: Option<u64>,
    parallel: bool,
) -> Result<(OutputRecord, bool)> {
    let report = check_equivalence(range.clone(), mode, bound, parallel)?;
    let clean = report.is_clean();
    let payload = VerifyPayload {
        mode,
        start: *range.start(),
        end: *range.end(),
        bound,
        checked: range.end() - range.start() + 1,
        nonempty: report.nonempty,
        mismatches: report.mismatches,
    };
    Ok((
        OutputRecord::new("verify", None, Payload::Report(payload)),
        clean,
    ))
}

pub fn parse_integer(s: &str) -> Result<Integer> {
    s.trim()
        .parse()
        .map_err(|_| Error::Precondition(format!("not an integer: {s:?}")))
}

pub fn parse_positive(s: &str) -> Result<Integer> {
    let n = parse_integer(s)?;
    require_at_least("n", &n, 1)?;
    Ok(n)
}

/// Accepts `a..b` or `a..=b` (both inclusive) or a single `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let bad = || Error::Precondition(format!("invalid range {s:?}; expected a..b"));
    let num = |v: &str| v.trim().parse::<u64>().map_err(|_| bad());
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if start < 1 || start > end {
        return Err(bad());
    }
    Ok(start..=end)
}

/// Parses `n1,n2,t1,t2,r,sign`, e.g. `5,1,1,1,1/2,plus`.
pub fn parse_point_params(s: &str) -> Result<RationalPointParams> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n1, n2, t1, t2, r, sign] = parts.as_slice() else {
        return Err(Error::Precondition(format!(
            "expected n1,n2,t1,t2,r,sign; got {s:?}"
        )));
    };
    let int = |v: &str| {
        v.parse::<Integer>()
            .map_err(|_| Error::Precondition(format!("not an integer: {v:?}")))
    };
    let r: Rational = r
        .parse()
        .map_err(|_| Error::Precondition(format!("not a rational: {r:?}")))?;
    Ok(RationalPointParams {
        n1: int(n1)?,
        n2: int(n2)?,
        t1: int(t1)?,
        t2: int(t2)?,
        r,
        sign: sign.parse()?,
    })
}

pub fn render(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("records always serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(record),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn render_text(record: &OutputRecord) -> String {
    let mut out = String::new();
    let n = record.n.as_deref().unwrap_or("-");
    let _ = writeln!(
        out,
        "# {} n={} schema={}",
        record.command, n, record.schema_version
    );
    match &record.payload {
        Payload::Certificate(p) => {
            let c = &p.certificate;
            let verdict = if c.is_solvable() {
                "solvable"
            } else {
                "unsolvable"
            };
            let _ = writeln!(out, "verdict {verdict}");
            if let Some(r) = c.reason {
                let _ = writeln!(out, "reason {r}");
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "witness {} {} {} {} {:?}", w.a, w.b, w.c, w.d, w.kind);
            }
            if let Some(t) = &p.witness_triple {
                let _ = writeln!(out, "solution {t}");
            }
        }
        Payload::Solutions(p) => {
            let _ = writeln!(out, "nonnegative {}", p.nonnegative.len());
            for t in &p.nonnegative {
                let _ = writeln!(out, "{t}");
            }
            let _ = writeln!(out, "total {}", p.total);
            for o in p.orbits.iter().flatten() {
                let _ = writeln!(out, "orbit {} size {}", o.canonical, o.size);
                let _ = writeln!(out, "{}", join(&o.members));
            }
        }
        Payload::Witness(p) => match (&p.triple, &p.source) {
            (Some(t), Some(src)) => {
                let _ = writeln!(out, "{t}");
                match src {
                    RationalSource::Quadruple { a, b, c, d } => {
                        let _ = writeln!(out, "quadruple {a} {b} {c} {d}");
                    }
                    RationalSource::OneZeroFamily { k1, k2, m1, m2 } => {
                        let _ = writeln!(out, "one-zero-family k1={k1} k2={k2} m1={m1} m2={m2}");
                    }
                    RationalSource::UnitFamily { k1, k2 } => {
                        let _ = writeln!(out, "unit-family k1={k1} k2={k2}");
                    }
                }
                if let Some(size) = p.orbit_size {
                    let _ = writeln!(out, "orbit-size {size}");
                }
            }
            _ => {
                let _ = writeln!(out, "none: {}", p.note.as_deref().unwrap_or(NO_WITNESS));
            }
        },
        Payload::QuadFamilies(p) => {
            if let Some(o) = p.obstruction {
                let _ = writeln!(out, "no integer solutions: n = {} (mod 4)", o.residue);
            }
            for f in &p.families {
                let _ = writeln!(out, "family {}", describe_family(f));
            }
            let _ = writeln!(
                out,
                "solutions {} (|y|,|z| <= {})",
                p.solutions.len(),
                p.bound
            );
            for t in &p.solutions {
                let _ = writeln!(out, "{t}");
            }
        }
        Payload::QuadPoint(p) => {
            let _ = writeln!(out, "{}", p.point);
            let q = &p.params;
            let sign = match q.sign {
                Sign::Plus => "plus",
                Sign::Minus => "minus",
            };
            let _ = writeln!(
                out,
                "params {},{},{},{},{},{}",
                q.n1, q.n2, q.t1, q.t2, q.r, sign
            );
        }
        Payload::Report(p) => {
            let mode = match p.mode {
                Mode::Quartic => "quartic",
                Mode::Quadratic => "quadratic",
            };
            let bound = p.bound.map(|b| format!(" box {b}")).unwrap_or_default();
            let _ = writeln!(out, "range {}..={} mode {mode}{bound}", p.start, p.end);
            let _ = writeln!(out, "checked {} nonempty {}", p.checked, p.nonempty);
            let _ = writeln!(out, "mismatches {}", p.mismatches.len());
            for m in &p.mismatches {
                let _ = writeln!(out, "n {}", m.n);
                for t in &m.solver_only {
                    let _ = writeln!(out, "  solver-only {t}");
                }
                for t in &m.oracle_only {
                    let _ = writeln!(out, "  oracle-only {t}");
                }
            }
        }
    }
    out
}

fn describe_family(f: &FamilyDescriptor) -> String {
    let excl = |e: &[Integer]| {
        if e.is_empty() {
            String::new()
        } else {
            let list: Vec<_> = e.iter().map(|t| t.to_string()).collect();
            format!(" (minus branch excludes t in {{{}}})", list.join(","))
        }
    };
    match f {
        FamilyDescriptor::YZero { k, excluded } => {
            format!("y-zero x=t^2+-{k} y=t z=0{}", excl(excluded))
        }
        FamilyDescriptor::ZZero { k, excluded } => {
            format!("z-zero x=t^2+-{k} y=0 z=t{}", excl(excluded))
        }
        FamilyDescriptor::Rho { d1, d2, e, f } => {
            format!("rho d1={d1} d2={d2} e={e} f={f}: x=r^2+(e/r)^2+-f y=+-r z=+-e/r, r | e")
        }
        FamilyDescriptor::Isolated { points } => {
            let list: Vec<_> = points.iter().map(|p| format!("({p})")).collect();
            format!("isolated {}", list.join(" "))
        }
    }
}

/// Exit status for a successfully computed record.
pub fn exit_code(clean: bool) -> i32 {
    if clean {
        0
    } else {
        2
    }
}
