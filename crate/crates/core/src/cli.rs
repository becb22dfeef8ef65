//! Command-line front end.
//!
//! `coxhecke <command> [flags] -- <operands>`. Results go to stdout as TSV
//! (default) or JSON. Exit status: 0 on success, 1 on a domain error or a
//! failed `verify`, 2 on a usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::affine::{
    bound_f, candidate_cells, effective_bound, enumerate_ball, s_k_sum, small_twist_set,
    AffinePermutation, AffineTypeA, Cocharacter, SuperbasicDatum,
};
use crate::coxeter::{CoxeterMatrix, CoxeterSystem, GroupElement};
use crate::error::Error;
use crate::group::CoxeterGroup;
use crate::hecke::HeckeAlgebra;
use crate::laurent::LaurentPoly;
use crate::verify::{run_all, Scope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Length,
    Reduce,
    Inversions,
    HeckeMult,
    Support,
    SupportUpper,
    Twist,
    TranslateLength,
    Sk,
    Bound,
    Enumerate,
    SmallTwist,
    Candidates,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coxhecke", version, about = "Coxeter groups, Hecke algebras and superbasic twists")]
pub struct Args {
    pub command: Command,
    /// Named system: A<k>, B<k>, affine-A<k>, I2(<m>), free(<k>).
    #[arg(long, conflicts_with = "system")]
    pub preset: Option<String>,
    /// JSON system file { "rank": n, "matrix": [[...]] } with 0 for infinity.
    #[arg(long)]
    pub system: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub radius: Option<usize>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// Hecke weights L(s), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<i64>>,
    #[arg(last = true)]
    pub operands: Vec<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parse `argv` (including the program name), run, and return the exit
/// status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&args) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}

/// Word rendering: space separated indices, `e` for the empty word.
pub fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// A generator word: optional `s:` prefix, indices separated by spaces or
/// commas, `e` for the identity.
pub fn parse_word(text: &str) -> Result<Vec<usize>, Error> {
    let body = text.trim();
    let body = body.strip_prefix("s:").unwrap_or(body).trim();
    if body.is_empty() || body == "e" {
        return Ok(Vec::new());
    }
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad generator index {t:?}"))))
        .collect()
}

fn parse_ints(body: &str, what: &str) -> Result<Vec<i64>, Error> {
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad {what} entry {t:?}")))
        })
        .collect()
}

/// `w:3,0` window notation.
pub fn parse_window(text: &str) -> Result<AffinePermutation, Error> {
    let body = text
        .trim()
        .strip_prefix("w:")
        .ok_or_else(|| Error::Parse(format!("expected w:<window>, got {text:?}")))?;
    AffinePermutation::new(parse_ints(body, "window")?)
}

/// `l:1,0,-1` cocharacter notation.
pub fn parse_cocharacter(text: &str) -> Result<Cocharacter, Error> {
    let body = text
        .trim()
        .strip_prefix("l:")
        .ok_or_else(|| Error::Parse(format!("expected l:<entries>, got {text:?}")))?;
    Ok(Cocharacter(parse_ints(body, "cocharacter")?))
}

/// An affine permutation given as `w:<window>` or as a word in
/// `s_0, .., s_{n-1}` (which needs `n`).
pub fn parse_affine(text: &str, n: Option<usize>) -> Result<AffinePermutation, Error> {
    let t = text.trim();
    if t.starts_with("w:") {
        let v = parse_window(t)?;
        if let Some(n) = n {
            if v.n() != n {
                return Err(Error::RankMismatch { expected: n, got: v.n() });
            }
        }
        return Ok(v);
    }
    let n = n.ok_or_else(|| Error::Parse("a word needs --n".to_string()))?;
    let group = AffineTypeA::new(n)?;
    let word = parse_word(t)?;
    if let Some(&s) = word.iter().find(|&&s| s >= n) {
        return Err(Error::GeneratorOutOfRange { index: s, rank: n });
    }
    Ok(group.from_word(&word))
}

fn load_system(args: &Args) -> CliResult<CoxeterSystem> {
    match (&args.preset, &args.system) {
        (Some(p), None) => Ok(CoxeterSystem::preset(p)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
            Ok(CoxeterSystem::from_json(&text)?)
        }
        (None, None) => Err(Failure::Usage("this command needs --preset or --system".into())),
        (Some(_), Some(_)) => Err(Failure::Usage("give exactly one of --preset, --system".into())),
    }
}

/// An element of a Coxeter system: a word, or `w:<window>` when the system
/// is `affine-A_{n-1}` with the standard numbering.
fn parse_system_element(sys: &CoxeterSystem, text: &str) -> CliResult<GroupElement> {
    if text.trim().starts_with("w:") {
        let v = parse_window(text)?;
        let n = v.n();
        let affine_matrix = CoxeterMatrix::preset(&format!("affine-A{}", n.saturating_sub(1)));
        if affine_matrix.ok().as_ref() != Some(sys.coxeter_matrix()) {
            return Err(Failure::Domain(format!(
                "window notation needs the affine-A{} system",
                n.saturating_sub(1)
            )));
        }
        if !v.is_affine_weyl() {
            return Err(Error::NonzeroComponent(v.component()).into());
        }
        let word = AffineTypeA::new(n)?.reduced_word(&v);
        return Ok(sys.element_from_word(&word)?);
    }
    Ok(sys.element_from_word(&parse_word(text)?)?)
}

fn operand_text(args: &Args) -> String {
    args.operands.join(" ")
}

/// Splits `x <elem> y <elem>` operands.
fn split_pair(args: &Args) -> CliResult<(String, String)> {
    let ops = &args.operands;
    let xi = ops.iter().position(|t| t == "x");
    let yi = ops.iter().position(|t| t == "y");
    match (xi, yi) {
        (Some(0), Some(j)) if j > 0 => Ok((ops[1..j].join(" "), ops[j + 1..].join(" "))),
        _ => Err(Failure::Usage("expected operands: x <element> y <element>".into())),
    }
}

fn datum(args: &Args) -> CliResult<SuperbasicDatum> {
    let n = args.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let m = args.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
    Ok(SuperbasicDatum::new(n, m)?)
}

fn coeff_json(p: &LaurentPoly) -> Value {
    let map: serde_json::Map<String, Value> = p
        .terms()
        .map(|(e, c)| {
            let v = match i64::try_from(c) {
                Ok(i) => json!(i),
                Err(_) => json!(c.to_string()),
            };
            (e.to_string(), v)
        })
        .collect();
    Value::Object(map)
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Rows of (length, window, word), sorted by (length, window).
fn affine_rows(args: &Args, mut elements: Vec<AffinePermutation>) -> String {
    let n = elements.first().map_or(2, AffinePermutation::n);
    let group = AffineTypeA::new(n).expect("elements have rank >= 2");
    elements.sort_by(|a, b| (a.length(), a).cmp(&(b.length(), b)));
    match args.format {
        Format::Tsv => elements
            .iter()
            .map(|v| format!("{}\t{}\t{}\n", v.length(), v, render_word(&group.reduced_word(v))))
            .collect(),
        Format::Json => to_json_text(&Value::Array(
            elements
                .iter()
                .map(|v| {
                    json!({
                        "length": v.length(),
                        "window": v.window(),
                        "word": group.reduced_word(v),
                    })
                })
                .collect(),
        )),
    }
}

fn execute(args: &Args) -> CliResult<(String, bool)> {
    let done = |s: String| Ok((s, true));
    match args.command {
        Command::Length | Command::Reduce => {
            let sys = load_system(args)?;
            let x = parse_system_element(&sys, &operand_text(args))?;
            let word = sys.word(&x);
            let text = match (args.command, args.format) {
                (Command::Length, Format::Tsv) => format!("{}\n", word.len()),
                (_, Format::Tsv) => format!("{}\n", render_word(&word)),
                (_, Format::Json) => to_json_text(&json!({ "word": word, "length": word.len() })),
            };
            done(text)
        }
        Command::Inversions => {
            let sys = load_system(args)?;
            let x = parse_system_element(&sys, &operand_text(args))?;
            let phi = sys.inversion_set(&x);
            let field = sys.field();
            let text = match args.format {
                Format::Tsv => phi
                    .roots
                    .iter()
                    .map(|r| {
                        let cols: Vec<String> = r.coords.iter().map(|c| field.render(c)).collect();
                        format!("{}\n", cols.join("\t"))
                    })
                    .collect(),
                Format::Json => to_json_text(&Value::Array(
                    phi.roots
                        .iter()
                        .map(|r| json!(r.coords.iter().map(|c| field.render(c)).collect::<Vec<_>>()))
                        .collect(),
                )),
            };
            done(text)
        }
        Command::HeckeMult | Command::Support | Command::SupportUpper => {
            let sys = load_system(args)?;
            let hecke = match &args.weights {
                Some(w) => HeckeAlgebra::with_weights(&sys, w.clone())?,
                None => HeckeAlgebra::new(&sys),
            };
            let (xs, ys) = split_pair(args)?;
            let x = parse_system_element(&sys, &xs)?;
            let y = parse_system_element(&sys, &ys)?;
            if args.command == Command::SupportUpper {
                let mut rows: Vec<Vec<usize>> =
                    hecke.support_upper(&x, &y).iter().map(|w| sys.word(w)).collect();
                rows.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
                return done(match args.format {
                    Format::Tsv => rows
                        .iter()
                        .map(|w| format!("{}\t{}\n", w.len(), render_word(w)))
                        .collect(),
                    Format::Json => to_json_text(&Value::Array(
                        rows.iter().map(|w| json!({ "word": w, "length": w.len() })).collect(),
                    )),
                });
            }
            let rows = hecke.rows(&hecke.t_mult(&x, &y));
            let with_coeff = args.command == Command::HeckeMult;
            done(match args.format {
                Format::Tsv => rows
                    .iter()
                    .map(|r| {
                        if with_coeff {
                            format!("{}\t{}\t{}\n", r.length, render_word(&r.word), r.coeff)
                        } else {
                            format!("{}\t{}\n", r.length, render_word(&r.word))
                        }
                    })
                    .collect(),
                Format::Json => to_json_text(&Value::Array(
                    rows.iter()
                        .map(|r| {
                            json!({
                                "word": r.word,
                                "length": r.length,
                                "coeff": coeff_json(&r.coeff),
                            })
                        })
                        .collect(),
                )),
            })
        }
        Command::Twist => {
            let d = datum(args)?;
            let v = parse_affine(&operand_text(args), Some(d.n()))?;
            done(affine_rows(args, vec![d.twist(&v)?]))
        }
        Command::TranslateLength => {
            let lambda = parse_cocharacter(&operand_text(args))?;
            if lambda.rank() < 2 {
                return Err(Error::RankTooSmall(lambda.rank()).into());
            }
            let t = AffinePermutation::translation(&lambda);
            done(match args.format {
                Format::Tsv => format!("{}\n", t.length()),
                Format::Json => to_json_text(&json!({
                    "lambda": lambda.0,
                    "length": t.length(),
                    "pairwise_spread": lambda.pairwise_spread(),
                    "window": t.window(),
                })),
            })
        }
        Command::Sk => {
            let lambda = parse_cocharacter(&operand_text(args))?;
            let n = lambda.rank();
            if n < 2 {
                return Err(Error::RankTooSmall(n).into());
            }
            let d = match args.m {
                Some(m) => Some(SuperbasicDatum::new(n, m)?),
                None => None,
            };
            let sm = match d {
                Some(d) => Some(s_k_sum(&lambda, d.m().rem_euclid(n as i64) as usize)?),
                None => None,
            };
            let mut rows = Vec::new();
            for k in 1..n {
                let sk = s_k_sum(&lambda, k)?;
                let dk = d.map(|d| d.d_of(k as i64));
                rows.push((k, sk, dk, dk.zip(sm).map(|(dk, sm)| dk as i64 * sm)));
            }
            done(match args.format {
                Format::Tsv => rows
                    .iter()
                    .map(|(k, sk, dk, bound)| match (dk, bound) {
                        (Some(dk), Some(b)) => format!("{k}\t{sk}\t{dk}\t{b}\n"),
                        _ => format!("{k}\t{sk}\n"),
                    })
                    .collect(),
                Format::Json => to_json_text(&Value::Array(
                    rows.iter()
                        .map(|(k, sk, dk, b)| json!({ "k": k, "s_k": sk, "d": dk, "d_times_s_m": b }))
                        .collect(),
                )),
            })
        }
        Command::Bound => {
            let n = args.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
            let printed = bound_f(n)?;
            let effective = effective_bound(n)?;
            done(match args.format {
                Format::Tsv => {
                    let mut s = format!("{printed}\n");
                    if effective != printed {
                        s.push_str(&format!("# enumeration bound (c = {}): {effective}\n", effective.c));
                    }
                    s
                }
                Format::Json => {
                    let spec = |b: &crate::affine::BoundSpec| {
                        json!({ "a": b.a.to_string(), "b": b.b.to_string(), "c": b.c, "text": b.to_string() })
                    };
                    to_json_text(&json!({ "n": n, "bound": spec(&printed), "effective": spec(&effective) }))
                }
            })
        }
        Command::Enumerate => {
            let n = args.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
            let radius = args.radius.ok_or_else(|| Failure::Usage("--radius is required".into()))?;
            done(affine_rows(args, enumerate_ball(n, radius)?))
        }
        Command::SmallTwist => {
            let d = datum(args)?;
            let r: i64 = operand_text(args)
                .trim()
                .parse()
                .map_err(|_| Failure::Usage("expected a positive integer r".into()))?;
            if r <= 0 {
                return Err(Failure::Domain(format!("r = {r} must be positive")));
            }
            done(affine_rows(args, small_twist_set(&d, r)?))
        }
        Command::Candidates => {
            let d = datum(args)?;
            let w = parse_affine(&operand_text(args), Some(d.n()))?;
            done(affine_rows(args, candidate_cells(&d, &w)?))
        }
        Command::Verify => {
            let sys = load_system(args)?;
            let defaults = Scope::default();
            let scope = Scope {
                radius: args.radius.unwrap_or(defaults.radius),
                samples: args.samples.unwrap_or(defaults.samples),
                seed: args.seed,
                root_depth: defaults.root_depth,
            };
            let report = run_all(&sys, &scope);
            let text = match args.format {
                Format::Tsv => report.to_tsv(),
                Format::Json => to_json_text(&json!({
                    "seed": report.seed,
                    "passed": report.passed(),
                    "suites": report.suites.iter().map(|s| json!({
                        "name": s.name,
                        "cases": s.tally.cases,
                        "failures": s.tally.failures,
                        "millis": s.millis as u64,
                        "first_failure": s.tally.first_failure,
                    })).collect::<Vec<_>>(),
                    "notes": report.notes,
                })),
            };
            Ok((text, report.passed()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("coxhecke").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn reduce_example() {
        assert_eq!(call(&["reduce", "--preset", "A2", "--", "1", "0", "1", "1", "0"]).1, "1\n");
        assert_eq!(call(&["reduce", "--preset", "A2", "--", "0", "0"]).1, "e\n");
    }

    #[test]
    fn bound_example() {
        assert_eq!(call(&["bound", "--n", "2"]).1, "f(z) = 2z - 4\n");
        assert_eq!(call(&["bound", "--n", "3"]).1, "f(z) = z - 9\n");
    }

    #[test]
    fn support_example() {
        let (code, out, _) = call(&["support", "--preset", "A2", "--", "x", "0 1", "y", "1 0"]);
        assert_eq!(code, 0);
        let lens: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
        assert_eq!(lens, vec!["0", "1", "3"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["length"]).0, 2);
        assert_eq!(call(&["length", "--preset", "A2", "--system", "x.json"]).0, 2);
        assert_eq!(call(&["length", "--preset", "Q7", "--", "0"]).0, 1);
        assert_eq!(call(&["length", "--preset", "A2", "--", "5"]).0, 1);
        assert_eq!(call(&["twist", "--n", "4", "--m", "2", "--", "w:1,2,3,4"]).0, 1);
        let (code, _, err) = call(&["candidates", "--n", "2", "--m", "1", "--", "w:2,3"]);
        assert_eq!(code, 1);
        assert!(err.contains("component"), "{err}");
    }

    #[test]
    fn element_syntax_round_trips() {
        let v = parse_window("w:3,0").unwrap();
        assert_eq!(parse_window(&format!("w:{v}")).unwrap(), v);
        let word = parse_word("s:0 1 0").unwrap();
        assert_eq!(parse_word(&format!("s:{}", render_word(&word))).unwrap(), word);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        let l = parse_cocharacter("l:1,0,-1").unwrap();
        assert_eq!(parse_cocharacter(&format!("l:{l}")).unwrap(), l);
        assert_eq!(parse_affine("0 1", Some(2)).unwrap(), parse_window("w:3,0").unwrap());
        assert!(parse_window("w:1,1").is_err());
        assert!(parse_word("0 x").is_err());
    }

    #[test]
    fn affine_commands() {
        assert_eq!(call(&["translate-length", "--", "l:1,0,-1"]).1, "4\n");
        assert_eq!(call(&["sk", "--m", "2", "--", "l:2,0,1"]).1, "1\t4\t2\t8\n2\t4\t1\t4\n");
        let (_, out, _) = call(&["enumerate", "--n", "2", "--radius", "3"]);
        assert_eq!(out.lines().count(), 7);
        assert!(out.starts_with("0\t1,2\te\n"));
        let (_, out, _) = call(&["small-twist", "--n", "2", "--m", "1", "--", "1"]);
        assert_eq!(out, "0\t1,2\te\n");
        let (_, out, _) = call(&["candidates", "--n", "2", "--m", "1", "--", "w:1,2"]);
        assert_eq!(out, "0\t1,2\te\n");
        let (_, out, _) = call(&["twist", "--n", "3", "--m", "1", "--", "s:0"]);
        assert_eq!(out, "1\t2,1,3\t1\n");
    }

    #[test]
    fn hecke_mult_rendering() {
        let (_, out, _) = call(&["hecke-mult", "--preset", "A2", "--", "x", "0", "y", "0"]);
        assert_eq!(out, "0\te\t1\n1\t0\tv - v^-1\n");
        let (_, out, _) =
            call(&["hecke-mult", "--preset", "A2", "--format", "json", "--", "x", "0", "y", "0"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[1]["coeff"], json!({"-1": -1, "1": 1}));
        let (_, out, _) = call(&["length", "--preset", "affine-A1", "--", "w:3,0"]);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn system_file_source() {
        let dir = std::env::temp_dir().join(format!("coxhecke-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sys.json");
        std::fs::write(&path, r#"{"rank": 2, "matrix": [[1, 0], [0, 1]]}"#).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(call(&["length", "--system", p, "--", "0 1 0 1 0 1"]).1, "6\n");
        std::fs::write(&path, r#"{"rank": 2, "matrix": [[1, 2], [3, 1]]}"#).unwrap();
        let (code, _, err) = call(&["length", "--system", p, "--", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("symmetric"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
