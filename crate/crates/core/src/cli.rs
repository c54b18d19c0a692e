//! Command line front end. [`run`] takes the argument vector and output sinks and
//! returns the process exit code, so the binary is a thin wrapper.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bases::{self, BasisId, Index};
use crate::compositions as comp;
use crate::error::{Error, Result};
use crate::expand::{self, ExpansionResult, PositiveFamily, SearchConfig};
use crate::hecke;
use crate::operators::{apply_word, longest_word, OperatorKind};
use crate::permutations::{FpfInvolution, Perm};
use crate::polyring::Poly;
use crate::symfunc::{self, SymmetricTruncation};
use crate::verify::{self, ConjectureId};

const EXPR_HELP: &str = "\
Expressions:
  EXPR := BASIS INDEX | OP[WORD] EXPR | POLYNOMIAL
  BASIS: key atom lascoux lascoux-atom pkey patom qkey qatom plascoux plascoux-atom
         ltilde-o ltilde-o-atom qlascoux schub groth invschub-sp invschub-o groth-sp groth-o
  INDEX: a weak composition (2,0,3,1 or 2031), a permutation (2143) or an
         involution in cycle notation ((1,3)(2,5)(4,7)(6,8))
  OP:    dd pi pibar dd-b pi-b pibar-b; WORD is comma separated letters applied
         right to left, or w0:n for the longest element of S_n
  POLYNOMIAL: sums of terms like 3*b*x1^2*x3
Examples:
  shiftedkeys eval \"qkey 2,0,3,1\"
  shiftedkeys eval \"pi[2,1] x1^2\"
  shiftedkeys expand --basis pkey \"invschub-sp (1,3)(2,5)(4,7)(6,8)\"
  shiftedkeys sym gp 3,1 --vars 4
  shiftedkeys hecke bhf 2143
  shiftedkeys verify FKSS --max-n 8 --json out.json";

#[derive(Parser, Debug)]
#[command(name = "shiftedkeys", version, about = "Shifted key polynomials and their relatives", after_help = EXPR_HELP)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandBasis {
    Key,
    Lascoux,
    Schubert,
    Grothendieck,
    Pkey,
    Qkey,
    Plascoux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SymBasis {
    /// Schur polynomials
    S,
    /// Stable Grothendieck polynomials G_λ
    G,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression to a polynomial.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand an expression in a basis. Shifted bases use a positive search.
    Expand {
        #[arg(long, value_enum)]
        basis: ExpandBasis,
        expr: String,
        #[arg(long)]
        all_solutions: bool,
        /// Variable bound for the shifted search
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Symmetric polynomials in finitely many variables.
    Sym {
        /// stanley stable-groth schur schur-p schur-q g gp gq gp-z gq-z inv-stanley-p inv-stanley-q
        family: String,
        index: String,
        #[arg(long)]
        vars: usize,
        /// Also expand into Schur or stable Grothendieck polynomials
        #[arg(long, value_enum)]
        expand: Option<SymBasis>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// 0-Hecke words and factorizations.
    Hecke {
        #[command(subcommand)]
        cmd: HeckeCmd,
    },
    /// Run a bounded conjecture sweep. Exit code 0 verified, 2 counterexample, 3 inconclusive.
    Verify {
        /// FKSS FKSO FKGS SYM_UNIQUE LEAD_Q LEAD_P VEX_CODE ALPHA1_CONV PKEY_SHAPE GQ_Z1
        id: String,
        /// Rank (or composition size) bound
        #[arg(long)]
        max_n: Option<usize>,
        /// Use the large literature bounds (slow)
        #[arg(long)]
        full_scale: bool,
        /// Write the report as JSON to this file
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate the P- and Q-key expansion tables and compare with the stored rows.
    Tables {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print and check the stored multi-term expansion fixtures.
    Fixtures {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum HeckeCmd {
    /// Bounded Hecke factorizations of a permutation
    Bhf { w: String },
    /// Generating function of bounded Hecke factorizations
    Km { w: String },
    /// Demazure product of a word
    Demazure { word: String },
    /// Permutations indexing the Grothendieck expansion of G^Sp_z
    Bsp { z: String },
    /// Whether a word is a symplectic Hecke word for z
    SpWord { z: String, word: String },
}

/// Parses `args` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.exit_code());
            e.exit_code()
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("i/o: {e}"))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Eval { expr, format } => {
            let f = eval_expr(&expr)?;
            writeln!(out, "{}", render_poly(&f, format)).map_err(io)?;
            Ok(0)
        }
        Command::Expand { basis, expr, all_solutions, vars, format } => {
            expand_cmd(basis, &expr, all_solutions, vars, format, out, err)
        }
        Command::Sym { family, index, vars, expand, format } => {
            let t = sym_eval(&family, &index, vars)?;
            match format {
                Format::Json => {
                    let mut j = json!({
                        "family": t.family.name(),
                        "index": t.index,
                        "vars": t.n,
                        "value": t.value.to_json(),
                    });
                    if let Some(b) = expand {
                        j["expansion"] = sym_expand(&t, b)?.to_json();
                    }
                    writeln!(out, "{j}").map_err(io)?;
                }
                _ => {
                    writeln!(out, "{}", render_poly(&t.value, format)).map_err(io)?;
                    if let Some(b) = expand {
                        writeln!(out, "{}", sym_expand(&t, b)?).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Hecke { cmd } => hecke_cmd(cmd, out),
        Command::Verify { id, max_n, full_scale, json, format } => {
            let id: ConjectureId = id.parse()?;
            let bound = if full_scale {
                let _ = writeln!(err, "warning: full-scale bound {} for {id} may take hours", id.full_bound());
                Some(max_n.unwrap_or(id.full_bound()))
            } else {
                max_n
            };
            let r = verify::run(id, bound)?;
            if let Some(path) = json {
                let s = serde_json::to_string_pretty(&r.to_json()).expect("report serializes");
                std::fs::write(&path, s + "\n").map_err(io)?;
            }
            match format {
                Format::Json => writeln!(out, "{}", r.to_json()).map_err(io)?,
                _ => write!(out, "{r}").map_err(io)?,
            }
            Ok(r.status.exit_code())
        }
        Command::Tables { format } => {
            let r = verify::reproduce_tables()?;
            match format {
                Format::Json => writeln!(out, "{}", r.to_json()).map_err(io)?,
                Format::Latex => {
                    for row in r.p_rows.iter().chain(&r.q_rows) {
                        writeln!(out, "{row}").map_err(io)?;
                    }
                }
                Format::Text => {
                    for (strict, table) in [(true, verify::generate_table(true, 6)?), (false, verify::generate_table(false, 6)?)] {
                        for row in table {
                            writeln!(out, "{}", row.to_text(strict)).map_err(io)?;
                        }
                    }
                }
            }
            for (t, i, got, want) in &r.mismatches {
                let _ = writeln!(err, "table {t} row {i} differs:\n  got    {got}\n  stored {want}");
            }
            for n in &r.linear_comb_failures {
                let _ = writeln!(err, "P/Q linear combination identity fails for n = {n}");
            }
            Ok(if r.ok() { 0 } else { 2 })
        }
        Command::Fixtures { format } => {
            let bad_sp = verify::check_sp_fixtures()?;
            let bad_o = verify::check_o_fixtures()?;
            let sp: Vec<Value> = verify::SP_EIGHT_FIXTURES
                .iter()
                .map(|(z, ls)| json!({ "z": z, "pkeys": ls }))
                .collect();
            let o: Vec<Value> = verify::O_FIVE_FIXTURES
                .iter()
                .map(|(z, ts)| json!({ "z": z, "qkeys": ts.iter().map(|(c, l)| json!([c, l])).collect::<Vec<_>>() }))
                .collect();
            match format {
                Format::Json => {
                    let failed = [bad_sp.clone(), bad_o.clone()].concat();
                    let j = json!({ "sp": sp, "o": o, "failed": failed });
                    writeln!(out, "{j}").map_err(io)?;
                }
                _ => {
                    for (z, ls) in verify::SP_EIGHT_FIXTURES {
                        let sum: Vec<String> = ls.iter().map(|l| format!("κP[{l}]")).collect();
                        writeln!(out, "S^Sp{z} = {}", sum.join(" + ")).map_err(io)?;
                    }
                    for (z, ts) in verify::O_FIVE_FIXTURES {
                        let sum: Vec<String> = ts
                            .iter()
                            .map(|(c, l)| if *c == 1 { format!("κQ[{l}]") } else { format!("{c}*κQ[{l}]") })
                            .collect();
                        writeln!(out, "S^O{z} = {}", sum.join(" + ")).map_err(io)?;
                    }
                }
            }
            for z in bad_sp.iter().chain(&bad_o) {
                let _ = writeln!(err, "fixture {z} does not match");
            }
            Ok(if bad_sp.is_empty() && bad_o.is_empty() { 0 } else { 2 })
        }
    }
}

fn render_poly(f: &Poly, format: Format) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Json => f.to_json_string(),
        Format::Latex => f.to_latex(),
    }
}

fn render_expansion(e: &ExpansionResult, format: Format) -> String {
    match format {
        Format::Json => e.to_json().to_string(),
        _ => e.to_string(),
    }
}

fn normalize_name(s: &str) -> String {
    s.trim().to_ascii_lowercase().replace('-', "_")
}

fn basis_of(name: &str) -> Option<BasisId> {
    let n = normalize_name(name);
    let alias = match n.as_str() {
        "schub" => "schubert",
        "groth" => "grothendieck",
        "invschub_sp" => "inv_schub_sp",
        "invschub_o" => "inv_schub_o",
        "groth_o" => "groth_o_vex",
        other => other,
    };
    alias.parse().ok()
}

fn operator_of(name: &str) -> Option<OperatorKind> {
    Some(match normalize_name(name).as_str() {
        "dd" => OperatorKind::DD,
        "pi" => OperatorKind::ISO,
        "pibar" => OperatorKind::BAR,
        "dd_b" => OperatorKind::DD_B,
        "pi_b" => OperatorKind::ISO_B,
        "pibar_b" => OperatorKind::BAR_B,
        _ => return None,
    })
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("w0:") {
        let n: usize = n.trim().parse().map_err(|_| Error::parse(format!("bad rank in {s:?}")))?;
        return Ok(longest_word(n));
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Vec<&str> = if s.contains(',') { s.split(',').collect() } else { s.split("").filter(|p| !p.is_empty()).collect() };
    parts
        .iter()
        .map(|p| match p.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(Error::parse(format!("bad letter {p:?} in word {s:?}"))),
        })
        .collect()
}

/// The basis and index of `BASIS INDEX`, if `expr` has that shape.
fn basis_expr(expr: &str) -> Result<Option<(BasisId, Index)>> {
    let expr = expr.trim();
    let (head, rest) = expr.split_once(char::is_whitespace).unwrap_or((expr, ""));
    match basis_of(head) {
        Some(b) => Ok(Some((b, bases::parse_index(b, rest.trim())?))),
        None => Ok(None),
    }
}

/// Evaluates the expression grammar in [`EXPR_HELP`].
pub fn eval_expr(expr: &str) -> Result<Poly> {
    let expr = expr.trim();
    if let Some((b, idx)) = basis_expr(expr)? {
        return bases::eval(b, &idx);
    }
    if let Some(open) = expr.find('[') {
        if let Some(kind) = operator_of(&expr[..open]) {
            let close = expr[open..].find(']').ok_or_else(|| Error::parse(format!("unclosed '[' in {expr:?}")))? + open;
            let word = parse_word(&expr[open + 1..close])?;
            let inner = eval_expr(&expr[close + 1..])?;
            return Ok(apply_word(kind, &word, &inner));
        }
    }
    Poly::parse(expr)
}

fn expand_cmd(
    basis: ExpandBasis,
    expr: &str,
    all_solutions: bool,
    vars: Option<usize>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let f = eval_expr(expr)?;
    let direct = match basis {
        ExpandBasis::Key => Some(expand::key_expand(&f)?),
        ExpandBasis::Lascoux => Some(expand::lascoux_expand(&f)?),
        ExpandBasis::Schubert => Some(expand::schubert_expand(&f)?),
        ExpandBasis::Grothendieck => Some(expand::grothendieck_expand(&f)?),
        _ => None,
    };
    if let Some(e) = direct {
        writeln!(out, "{}", render_expansion(&e, format)).map_err(io)?;
        if !e.is_complete() {
            let _ = writeln!(err, "warning: nonzero residual {}", e.residual);
        }
        return Ok(0);
    }
    let fam = match basis {
        ExpandBasis::Pkey => PositiveFamily::PKEY,
        ExpandBasis::Qkey => PositiveFamily::QKEY_2POW,
        _ => PositiveFamily::PLASCOUX,
    };
    // for S^O_z the conjectured coefficients are 2^{cyc(z) - diag(α)}
    let cyc = match basis_expr(expr)? {
        Some((BasisId::INV_SCHUB_O, Index::Permutation(z))) if fam == PositiveFamily::QKEY_2POW => Some(z.cyc() as u32),
        _ => None,
    };
    let cfg = SearchConfig { nvars: vars, all_solutions, cyc, ..Default::default() };
    let res = expand::positive_search(&f, fam, &cfg)?;
    if res.solutions.is_empty() {
        return Err(if res.exhausted {
            Error::domain(format!("no positive {} expansion exists within the search space", fam.basis()))
        } else {
            Error::Guard(format!("search stopped after {} nodes", res.nodes))
        });
    }
    match format {
        Format::Json => {
            let sols: Vec<Value> = res.solutions.iter().map(ExpansionResult::to_json).collect();
            writeln!(out, "{}", json!({ "solutions": sols, "exhausted": res.exhausted, "nodes": res.nodes })).map_err(io)?;
        }
        _ => {
            for s in &res.solutions {
                writeln!(out, "{s}").map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn sym_eval(family: &str, index: &str, n: usize) -> Result<SymmetricTruncation> {
    let part = || comp::parse(index);
    let perm = || Perm::parse(index);
    let fpf = || FpfInvolution::parse(index);
    match normalize_name(family).as_str() {
        "stanley" => symfunc::stanley(&perm()?, n),
        "stable_groth" => symfunc::stable_groth(&perm()?, n),
        "schur" | "s" => symfunc::schur(&part()?, n),
        "schur_p" | "p" => symfunc::schur_p(&part()?, n),
        "schur_q" | "q" => symfunc::schur_q(&part()?, n),
        "g" => symfunc::g_lambda(&part()?, n),
        "gp" => symfunc::gp(&part()?, n),
        "gq" => symfunc::gq(&part()?, n),
        "gp_z" => symfunc::gp_z(&fpf()?, n),
        "gq_z" => symfunc::gq_z_igrassmannian(&perm()?, n),
        "inv_stanley_p" => symfunc::inv_stanley_p(&fpf()?, n),
        "inv_stanley_q" => symfunc::inv_stanley_q(&perm()?, n),
        other => Err(Error::parse(format!("unknown symmetric family {other:?}"))),
    }
}

fn sym_expand(t: &SymmetricTruncation, b: SymBasis) -> Result<symfunc::PartitionExpansion> {
    match b {
        SymBasis::S => symfunc::schur_expand(t),
        SymBasis::G => symfunc::g_basis_expand(t),
    }
}

fn hecke_cmd(cmd: HeckeCmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        HeckeCmd::Bhf { w } => {
            let w = Perm::parse(&w)?;
            for a in hecke::bhf_enumerate(&w) {
                writeln!(out, "{a}").map_err(io)?;
            }
        }
        HeckeCmd::Km { w } => {
            writeln!(out, "{}", hecke::knutson_miller_sum(&Perm::parse(&w)?)).map_err(io)?;
        }
        HeckeCmd::Demazure { word } => {
            writeln!(out, "{}", hecke::demazure_product(&parse_word(&word)?)).map_err(io)?;
        }
        HeckeCmd::Bsp { z } => {
            let z = FpfInvolution::parse(&z)?;
            let labels: Vec<String> = hecke::bsp(&z)?
                .iter()
                .map(|w| w.window(z.n()).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(if z.n() > 9 { "," } else { "" }))
                .collect();
            writeln!(out, "{}", labels.join(" ")).map_err(io)?;
        }
        HeckeCmd::SpWord { z, word } => {
            let ok = hecke::is_sp_hecke_word(&FpfInvolution::parse(&z)?, &parse_word(&word)?);
            writeln!(out, "{ok}").map_err(io)?;
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["shiftedkeys".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(call(&["eval", "key 0"]), (0, "1\n".into(), String::new()));
        let (c, o, _) = call(&["eval", "qkey 2,0,3,1"]);
        assert_eq!(c, 0);
        assert_eq!(o.trim(), bases::qkey(&[2, 0, 3, 1]).unwrap().to_string());
        let (_, o, _) = call(&["eval", "pi[1] x1^2"]);
        assert_eq!(o.trim(), "x1^2 + x1*x2 + x2^2");
        let (_, o, _) = call(&["eval", "pi[w0:3] x1^2*x2"]);
        assert_eq!(Poly::parse(o.trim()).unwrap(), symfunc::schur(&[2, 1], 3).unwrap().value);
    }

    #[test]
    fn json_round_trip() {
        let (c, o, _) = call(&["eval", "--format", "json", "groth 2143"]);
        assert_eq!(c, 0);
        assert_eq!(Poly::from_json_str(o.trim()).unwrap(), bases::grothendieck(&Perm::parse("2143").unwrap()));
    }

    #[test]
    fn error_codes() {
        assert_eq!(call(&["eval", "key 1,x"]).0, 64);
        assert_eq!(call(&["frobnicate"]).0, 64);
        assert_eq!(call(&["eval", "pkey 3"]).0, 65);
        assert_eq!(call(&["verify", "FKSS", "--max-n", "99"]).0, 69);
        let (c, _, e) = call(&["eval", "key 1,x"]);
        assert_eq!(c, 64);
        assert!(e.starts_with("error[64]"), "{e}");
    }

    #[test]
    fn expand_pkey() {
        let (c, o, _) = call(&["expand", "--basis", "pkey", "invschub-sp (1,3)(2,5)(4,7)(6,8)"]);
        assert_eq!(c, 0);
        assert_eq!(o.trim(), "κP[140101] + κP[3303]");
        let (c, o, _) = call(&["expand", "--basis", "qkey", "invschub-o (1,2)(3,4)"]);
        assert_eq!(c, 0);
        assert_eq!(o.trim(), "2*κQ[201]");
    }

    #[test]
    fn sym_and_hecke() {
        let (c, o, _) = call(&["sym", "gp", "3,1", "--vars", "4", "--expand", "g"]);
        assert_eq!(c, 0);
        assert_eq!(o.lines().count(), 2);
        let (_, o, _) = call(&["hecke", "bhf", "2143"]);
        assert_eq!(o.lines().count(), 7);
        assert!(o.contains("(31,3,3)"));
        let (_, o, _) = call(&["hecke", "bsp", "(1,4)(2,3)"]);
        assert_eq!(o.trim(), "1342 3124 3142");
        assert_eq!(call(&["hecke", "demazure", "1,2,1,1"]).1.trim(), "321");
    }

    #[test]
    fn identical_invocations_identical_output() {
        let a = call(&["expand", "--basis", "plascoux", "groth-sp (1,4)(2,3)(5,8)(6,7)", "--format", "json"]);
        let b = call(&["expand", "--basis", "plascoux", "groth-sp (1,4)(2,3)(5,8)(6,7)", "--format", "json"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }

    #[test]
    fn tables_and_fixtures() {
        let (c, o, e) = call(&["tables", "--format", "latex"]);
        assert_eq!(c, 0, "{e}");
        assert_eq!(o.lines().count(), verify::TABLE_P.len() + verify::TABLE_Q.len());
        assert_eq!(call(&["fixtures"]).0, 0);
    }
}
