use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use punctual::freeness::{check_family, lemma22_factor, strip_units, Rule};
use punctual::hilbert::{classify_family, hn_eval, ideal_monic_generator, is_point_of_hn, HnElement, IdealPresentation};
use punctual::norms::{cofactor, inverse_mod, norm_coeffs, MonicFamily};
use punctual::rings::{Domain, Elem, UniPoly};
use punctual::sympoly::{delta_cofactor, delta_poly, ebasis_eval, ebasis_reduce, ebasis_vars, sym_vars, EBasisPoly};

use crate::error::CliError;
use crate::parse::{parse_domain, parse_elem, parse_multi, parse_uni, split_list};
use crate::report::{string, strings};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "punctual", version, about = "Norms, freeness checks and points of H_n over exact domains")]
pub struct Cli {
    /// Domain descriptor such as QQ, GF(7), GF(2^3), QQ(u) or GF(5)[u,v].
    #[arg(long, global = true, default_value = "QQ")]
    pub domain: String,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients s_1..s_n of the norm of G modulo F, and the cofactor.
    Norms {
        #[arg(long)]
        family: String,
        #[arg(long = "g")]
        g: String,
    },
    /// Inverse of G modulo F.
    Invert {
        #[arg(long)]
        family: String,
        #[arg(long = "g")]
        g: String,
    },
    /// Decide whether F has only zero or transcendental roots.
    Check {
        #[arg(long)]
        family: String,
    },
    /// The point of H_n classifying F.
    Classify {
        #[arg(long)]
        family: String,
    },
    /// Whether (u_1, .., u_n) is a point of Spec H_n.
    PointTest {
        #[arg(long)]
        point: String,
    },
    /// Monic generator of the ideal spanned by the generators.
    IdealGen {
        #[arg(long)]
        gens: String,
    },
    /// Factorization I*g = H*G.
    Lemma22 {
        #[arg(long = "g")]
        g: String,
    },
    /// Split G into the part with zero or transcendental roots and a unit.
    Strip {
        #[arg(long = "g")]
        g: String,
    },
    /// Rewrite a symmetric polynomial in t1..tn through s1..sn.
    Ebasis {
        #[arg(long)]
        n: usize,
        #[arg(long = "g")]
        g: String,
        /// Evaluate the result at s = point.
        #[arg(long)]
        point: Option<String>,
    },
    /// Delta(G, t) and the cofactor H(x, t).
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long = "g")]
        g: String,
    },
    /// Evaluate num / prod s_n(den_j(t)) at the point classifying F.
    HnEval {
        #[arg(long)]
        family: String,
        /// Numerator in s1..sn.
        #[arg(long)]
        num: String,
        /// Comma-separated denominators g(x) with g(0) != 0.
        #[arg(long)]
        den: Option<String>,
    },
    /// Run the seeded invariant suite.
    Verify {
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Norms { .. } => "norms",
            Command::Invert { .. } => "invert",
            Command::Check { .. } => "check",
            Command::Classify { .. } => "classify",
            Command::PointTest { .. } => "point-test",
            Command::IdealGen { .. } => "ideal-gen",
            Command::Lemma22 { .. } => "lemma22",
            Command::Strip { .. } => "strip",
            Command::Ebasis { .. } => "ebasis",
            Command::Delta { .. } => "delta",
            Command::HnEval { .. } => "hn-eval",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Parsed inputs, echoed in canonical form once they parse.
pub struct Inputs {
    pub map: Map<String, Value>,
}

impl Inputs {
    fn domain(&mut self, text: &str) -> Result<Domain, CliError> {
        self.map.insert("domain".into(), string(text));
        let d = parse_domain(text)?;
        self.map.insert("domain".into(), string(&d));
        Ok(d)
    }

    fn uni(&mut self, key: &str, text: &str, d: &Domain) -> Result<UniPoly, CliError> {
        self.map.insert(key.into(), string(text));
        let p = parse_uni(text, d)?;
        self.map.insert(key.into(), string(&p));
        Ok(p)
    }

    fn family(&mut self, text: &str, d: &Domain) -> Result<MonicFamily, CliError> {
        let f = self.uni("family", text, d)?;
        Ok(MonicFamily::from_poly(&f)?)
    }

    fn uni_list(&mut self, key: &str, text: &str, d: &Domain) -> Result<Vec<UniPoly>, CliError> {
        self.map.insert(key.into(), string(text));
        let items = split_list(text)
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| parse_uni(s, d))
            .collect::<Result<Vec<_>, _>>()?;
        self.map.insert(key.into(), strings(&items));
        Ok(items)
    }

    fn elems(&mut self, key: &str, text: &str, d: &Domain) -> Result<Vec<Elem>, CliError> {
        self.map.insert(key.into(), string(text));
        let items = split_list(text).into_iter().map(|s| parse_elem(s, d)).collect::<Result<Vec<_>, _>>()?;
        self.map.insert(key.into(), strings(&items));
        Ok(items)
    }

    fn number(&mut self, key: &str, n: usize) {
        self.map.insert(key.into(), Value::from(n));
    }
}

/// Result payload; `passed` is false only for a failing `verify` run.
pub struct Outcome {
    pub result: Map<String, Value>,
    pub passed: bool,
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn execute(cli: &Cli, inputs: &mut Inputs) -> Result<Outcome, CliError> {
    let d = inputs.domain(&cli.domain)?;
    let result = match &cli.command {
        Command::Norms { family, g } => {
            let f = inputs.family(family, &d)?;
            let g = inputs.uni("g", g, &d)?;
            let s = norm_coeffs(&f, &g)?;
            let h = cofactor(&f, &g)?;
            obj(vec![("s", strings((1..=f.n()).map(|i| s.get(i, &d)))), ("cofactor", string(h))])
        }
        Command::Invert { family, g } => {
            let f = inputs.family(family, &d)?;
            let g = inputs.uni("g", g, &d)?;
            obj(vec![("inverse", string(inverse_mod(&f, &g)?))])
        }
        Command::Check { family } => {
            let f = inputs.family(family, &d)?;
            let v = check_family(&f)?;
            let mut out = obj(vec![("status", string(v.status))]);
            match &v.witness {
                Some(w) => {
                    out.insert("witness".into(), string(&w.q));
                    if let Some(p) = &w.point {
                        out.insert("point".into(), strings(p));
                    }
                }
                None => {
                    let c = &v.certificate;
                    out.insert("rule".into(), string(c.rule));
                    if c.rule == Rule::FunctionField {
                        out.insert("rejected".into(), strings(&c.rejected));
                    }
                }
            }
            out
        }
        Command::Classify { family } => {
            let f = inputs.family(family, &d)?;
            let p = classify_family(&f)?;
            obj(vec![("status", string(p.verdict().status)), ("u", strings(p.u()))])
        }
        Command::PointTest { point } => {
            let u = inputs.elems("point", point, &d)?;
            let t = is_point_of_hn(&u, &d)?;
            let mut out = obj(vec![("is_point", Value::Bool(t.is_point))]);
            if let Some(w) = t.witness {
                out.insert("witness".into(), string(w.q));
            }
            out
        }
        Command::IdealGen { gens } => {
            let gens = inputs.uni_list("gens", gens, &d)?;
            if gens.is_empty() {
                return Err(CliError::Usage("--gens needs at least one generator".into()));
            }
            let m = ideal_monic_generator(&IdealPresentation::new(&d, gens)?)?;
            obj(vec![("generator", string(m.generator)), ("rank", Value::from(m.rank))])
        }
        Command::Lemma22 { g } => {
            let g = inputs.uni("g", g, &d)?;
            let l = lemma22_factor(&g)?;
            obj(vec![("g", string(l.g)), ("i", string(l.i)), ("h", string(l.h))])
        }
        Command::Strip { g } => {
            let g = inputs.uni("g", g, &d)?;
            let s = strip_units(&g)?;
            let dim = s.f_part.deg();
            obj(vec![("f_part", string(s.f_part)), ("unit_part", string(s.unit_part)), ("dimension", Value::from(dim))])
        }
        Command::Ebasis { n, g, point } => {
            inputs.number("n", *n);
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            inputs.map.insert("g".into(), string(g));
            let p = parse_multi(g, &d, &sym_vars(*n))?;
            inputs.map.insert("g".into(), string(&p));
            let q = ebasis_reduce(&p)?;
            let mut out = obj(vec![("ebasis", string(&q))]);
            if let Some(point) = point {
                let u = inputs.elems("point", point, &d)?;
                out.insert("value".into(), string(ebasis_eval(&q, &u)?));
            }
            out
        }
        Command::Delta { n, g } => {
            inputs.number("n", *n);
            if *n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let g = inputs.uni("g", g, &d)?;
            obj(vec![("delta", string(delta_poly(&g, *n)?)), ("cofactor", string(delta_cofactor(&g, *n)?))])
        }
        Command::HnEval { family, num, den } => {
            let f = inputs.family(family, &d)?;
            let k = d.base_field();
            let n = f.n();
            inputs.map.insert("num".into(), string(num));
            let numerator = EBasisPoly::from_poly(n, parse_multi(num, &k, &ebasis_vars(n))?)?;
            inputs.map.insert("num".into(), string(&numerator));
            let dens = match den {
                Some(text) => inputs.uni_list("den", text, &k)?,
                None => Vec::new(),
            };
            let a = HnElement::new(numerator, dens)?;
            let p = classify_family(&f)?;
            obj(vec![("element", string(&a)), ("value", string(hn_eval(&a, &p)?))])
        }
        Command::Verify { cases } => {
            let seed = cli.seed.unwrap_or(0);
            inputs.number("cases", *cases);
            let checks = verify::run_suite(seed, *cases);
            let passed = checks.iter().all(|c| c.passed == c.cases);
            let rows = checks
                .iter()
                .map(|c| {
                    Value::Object(obj(vec![
                        ("name", string(c.name)),
                        ("cases", Value::from(c.cases)),
                        ("passed", Value::from(c.passed)),
                    ]))
                })
                .collect();
            return Ok(Outcome {
                result: obj(vec![("checks", Value::Array(rows)), ("all_passed", Value::Bool(passed))]),
                passed,
            });
        }
    };
    Ok(Outcome { result, passed: true })
}
