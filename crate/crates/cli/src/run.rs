//! Dispatches a parsed config to the library and renders the result.

use std::fmt;

use polycomp::claims::{run_claim, run_suite, SuiteConfig, Tested};
use polycomp::composite::{property_report, CompositeRing};
use polycomp::covers::{composite_cover, CoverVariant};
use polycomp::exec::ExecMode;
use polycomp::ideals::FractionalIdeal;
use polycomp::polyring::Poly;

use crate::config::{Command, CoverSpec, Format, IdealOp, InstanceConfig};
use crate::expr::{eval, Literal};

/// Success, contradiction found by `verify`, or error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Contradiction = 1,
    Error = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// One output line: a kind tag and ordered fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

impl Record {
    fn new(kind: &str) -> Record {
        Record { kind: kind.to_string(), fields: Vec::new() }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Record {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }
}

fn quote(v: &str) -> String {
    if !v.is_empty() && !v.contains([' ', '"', '=']) {
        v.to_string()
    } else {
        format!("\"{}\"", v.replace('"', "'"))
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind)?;
        for (k, v) in &self.fields {
            write!(f, " {k}={}", quote(v))?;
        }
        Ok(())
    }
}

/// Failure of an operation, naming the operation and the violated condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunError {
    pub op: &'static str,
    pub message: String,
    pub precondition: Option<&'static str>,
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: op={} {}", self.op, self.message)?;
        if let Some(p) = self.precondition {
            write!(f, " (requires: {p})")?;
        }
        Ok(())
    }
}

impl std::error::Error for RunError {}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: ExitStatus,
    pub text: String,
}

fn precondition(op: &str) -> Option<&'static str> {
    Some(match op {
        "factor" | "lengths" | "divisors" => "a nonzero nonunit element of the ring",
        "chain" => "A not a field, f in X*B[X], and d a nonunit of A invertible in B",
        "bezout" => "a pair F_p(t^(p^e)) inside F_p(t)",
        "ideal" => "finite fields K inside L and generators in L[X]",
        "cover" => "a modulus other than 0 and +-1, or a finite small field inside the big one",
        _ => return None,
    })
}

struct Ctx<'a> {
    op: &'static str,
    cfg: &'a InstanceConfig,
}

impl Ctx<'_> {
    fn fail(&self, e: impl fmt::Display) -> RunError {
        RunError {
            op: self.op,
            message: e.to_string(),
            precondition: precondition(self.op),
        }
    }

    fn ring(&self) -> &CompositeRing {
        self.cfg.ring.as_ref().expect("parser requires a ring for this command")
    }

    fn element(&self, lit: &Literal) -> Result<Poly, RunError> {
        let p = lit.poly(self.ring()).map_err(|e| self.fail(e))?;
        if !self.ring().contains(&p) {
            return Err(self.fail(format!("{} is not an element of {}", lit.text, self.ring())));
        }
        Ok(p)
    }

    fn suite(&self) -> SuiteConfig {
        let o = &self.cfg.options;
        SuiteConfig {
            seed: o.seed,
            degree_bound: o.degree_bound,
            window: o.window,
            ..SuiteConfig::default()
        }
    }
}

/// Runs the command. Errors are reported in the outcome with status 2.
pub fn execute(cfg: &InstanceConfig) -> Outcome {
    let ctx = Ctx { op: cfg.command.name(), cfg };
    let result = match &cfg.command {
        Command::Verify { claim, overfield } => return verify(&ctx, *claim, *overfield),
        other => dispatch(&ctx, other),
    };
    match result {
        Ok(records) => Outcome {
            status: ExitStatus::Ok,
            text: render(&records, cfg.options.format),
        },
        Err(e) => Outcome {
            status: ExitStatus::Error,
            text: format!("{e}\n"),
        },
    }
}

fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Records => {
            for r in records {
                out.push_str(&r.to_string());
                out.push('\n');
            }
        }
        Format::Table => {
            for r in records {
                out.push_str(&r.kind);
                out.push('\n');
                let width = r.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &r.fields {
                    out.push_str(&format!("  {k:<width$}  {v}\n"));
                }
            }
        }
    }
    out
}

fn dispatch(ctx: &Ctx, cmd: &Command) -> Result<Vec<Record>, RunError> {
    match cmd {
        Command::Props => {
            let report = property_report(ctx.ring());
            let mut out = vec![Record::new("RING").with("ring", ctx.ring()).with("kind", ctx.ring().kind())];
            for e in &report.entries {
                out.push(
                    Record::new("PROP")
                        .with("property", e.property)
                        .with("asserted", &e.asserted)
                        .with("cite", &e.cite),
                );
            }
            Ok(out)
        }
        Command::Factor { elem } => {
            let ring = ctx.ring();
            let e = ctx.element(elem)?;
            let class = ring.classify_irreducible(&e).map_err(|err| ctx.fail(err))?;
            let fac = ring.factor_atoms(&e).map_err(|err| ctx.fail(err))?;
            let unit = ring.pair().map(|p| p.small().format(&fac.unit)).unwrap_or_else(|| "1".into());
            Ok(vec![Record::new("FACTOR")
                .with("elem", &e)
                .with("irreducible", class.irreducible)
                .with("tag", class.tag)
                .with("unit", unit)
                .with("atoms", &fac)
                .with("length", fac.len())])
        }
        Command::Lengths { elem } => {
            let e = ctx.element(elem)?;
            let set = ctx
                .ring()
                .length_set(&e, ctx.cfg.options.degree_bound)
                .map_err(|err| ctx.fail(err))?;
            let shown: Vec<String> = set.iter().map(|l| l.to_string()).collect();
            Ok(vec![Record::new("LENGTHS")
                .with("elem", &e)
                .with("set", format!("{{{}}}", shown.join(",")))
                .with("half_factorial", set.len() == 1)])
        }
        Command::Divisors { elem } => {
            let e = ctx.element(elem)?;
            let divs = ctx.ring().irreducible_divisors(&e).map_err(|err| ctx.fail(err))?;
            let mut out = vec![Record::new("DIVISORS").with("elem", &e).with("count", divs.len())];
            out.extend(divs.iter().map(|d| Record::new("DIVISOR").with("irreducible", d)));
            Ok(out)
        }
        Command::Chain { f, d, steps } => {
            let f = ctx.element(f)?;
            let chain = ctx.ring().accp_failure_chain(&f, d, *steps).map_err(|err| ctx.fail(err))?;
            let mut out = vec![Record::new("CHAIN")
                .with("f", &f)
                .with("d", d)
                .with("ideals", chain.generators.len())
                .with("all_strict", chain.all_strict())];
            for (k, g) in chain.generators.iter().enumerate() {
                let mut r = Record::new("LINK").with("k", k).with("generator", g);
                if let Some(s) = chain.strict.get(k) {
                    r = r.with("strictly_inside_next", s);
                }
                out.push(r);
            }
            Ok(out)
        }
        Command::Bezout { f, g } => {
            let ring = ctx.ring();
            let f = f.poly(ring).map_err(|e| ctx.fail(e))?;
            let g = g.poly(ring).map_err(|e| ctx.fail(e))?;
            let w = ring.almost_bezout_witness(&f, &g).map_err(|err| ctx.fail(err))?;
            Ok(vec![Record::new("BEZOUT")
                .with("f", &f)
                .with("g", &g)
                .with("n", w.n)
                .with("f_power", &w.f_power)
                .with("g_power", &w.g_power)
                .with("h", &w.h)
                .with("s", &w.s)
                .with("t", &w.t)
                .with("verified", w.verify())])
        }
        Command::Ideal { gens, pole, op } => ideal(ctx, gens, *pole, *op),
        Command::Cover(spec) => {
            let variant = match spec {
                CoverSpec::Integers { r } => CoverVariant::ResidueFinite { modulus: r.clone() },
                CoverSpec::Finite { small, big, b } => {
                    let b = eval(b, big).map_err(|e| ctx.fail(e))?;
                    CoverVariant::finite(small.clone(), big.clone(), b).map_err(|e| ctx.fail(e))?
                }
            };
            let inst = composite_cover(&variant).map_err(|e| ctx.fail(e))?;
            Ok(vec![Record::new("COVER")
                .with("ring", &inst.variant)
                .with("witness", &inst.witness)
                .with("cover", &inst.cover)])
        }
        Command::Verify { .. } => unreachable!("handled by verify"),
    }
}

fn ideal(ctx: &Ctx, gens: &[Literal], pole: usize, op: IdealOp) -> Result<Vec<Record>, RunError> {
    let ring = ctx.ring();
    let polys = gens
        .iter()
        .map(|g| g.poly(ring).map_err(|e| ctx.fail(e)))
        .collect::<Result<Vec<Poly>, _>>()?;
    let mut ideal = FractionalIdeal::new(ring, pole, polys).map_err(|e| ctx.fail(e))?;
    ideal.set_window(ideal.window().max(ctx.cfg.options.window));
    let base = Record::new("IDEAL").with("ideal", &ideal).with("window", ideal.window());
    let rec = match op {
        IdealOp::Invertible => {
            let v = ideal.is_invertible().map_err(|e| ctx.fail(e))?;
            base.with("op", "invertible").with("result", v)
        }
        IdealOp::Colon => {
            let c = ideal.colon().map_err(|e| ctx.fail(e))?;
            base.with("op", "colon").with("result", c)
        }
        IdealOp::Factor => {
            let fac = ideal.factor().map_err(|e| ctx.fail(e))?;
            let text: Vec<String> = fac.iter().map(|(p, e)| format!("{p}^{e}")).collect();
            base.with("op", "factor").with("result", text.join("*"))
        }
        IdealOp::Pir => {
            let v = ideal.quotient_pir_check(ExecMode::default()).map_err(|e| ctx.fail(e))?;
            base.with("op", "pir").with("result", v)
        }
    };
    Ok(vec![rec])
}

fn verify(ctx: &Ctx, claim: Option<polycomp::claims::ClaimId>, overfield: bool) -> Outcome {
    let cfg = SuiteConfig {
        overfield_automorphisms: overfield,
        ..ctx.suite()
    };
    let ring = ctx.ring();
    let format = ctx.cfg.options.format;
    if let Some(id) = claim {
        return match run_claim(ring, id, &cfg) {
            Ok(v) => Outcome {
                status: if v.tested == Tested::Fail { ExitStatus::Contradiction } else { ExitStatus::Ok },
                text: match format {
                    Format::Records => format!("{}\n", v.record()),
                    Format::Table => format!("{:<12} {:<8} {:<8} {}\n", v.id.as_str(), v.asserted, v.tested, v.witness),
                },
            },
            Err(e) => Outcome {
                status: ExitStatus::Error,
                text: format!("{}\n", ctx.fail(e)),
            },
        };
    }
    let report = run_suite(ring, &cfg);
    let status = if report.summary.contradict > 0 { ExitStatus::Contradiction } else { ExitStatus::Ok };
    let text = match format {
        Format::Records => report.render_records(),
        Format::Table => report.render_table(),
    };
    Outcome { status, text }
}
