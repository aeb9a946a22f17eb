//! Command-line driver for `laxcal`.
//!
//! Exit codes: 0 computed, 1 FAIL or internal error, 2 inconclusive,
//! 3 input error, 4 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use laxcal_core::curated;
use laxcal_core::jonsson::hs_class_membership;
use laxcal_core::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "laxcal", version, about = "Finite universal algebra workbench")]
pub struct Cli {
    /// Algebra file; repeatable. Names here shadow the built-in suite.
    #[arg(long, global = true)]
    pub file: Vec<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "LAXCAL_MAX_FREE_SIZE")]
    pub max_free_size: Option<usize>,
    /// Most product factors tried by the witness search.
    #[arg(long, global = true, env = "LAXCAL_MAX_WITNESS_FACTORS")]
    pub max_witness_factors: Option<usize>,
    #[arg(long, global = true, env = "LAXCAL_MAX_LATTICE_SIZE")]
    pub max_lattice_size: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Class {
    /// Comma-separated generators of the variety; defaults to the algebra itself.
    #[arg(long, value_delimiter = ',')]
    pub class: Vec<String>,
    /// Assert that the variety is congruence modular.
    #[arg(long)]
    pub modular: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the congruence lattice.
    Con {
        algebra: String,
        /// Emit DOT instead of the listing.
        #[arg(long)]
        dot: bool,
    },
    Monolith {
        algebra: String,
    },
    /// Term-condition commutator.
    Commutator {
        algebra: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// Free intersection of two congruences.
    Freeint {
        algebra: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        class: Class,
    },
    /// The pair algebra B(mu), with Delta for an optional alpha.
    Bmu {
        algebra: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Decide whether alpha laxly centralizes mu (mu defaults to the monolith).
    Laxcent {
        algebra: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        class: Class,
    },
    /// Maximal congruences laxly centralizing mu (default: the monolith).
    Maxcent {
        algebra: String,
        #[arg(long)]
        mu: Option<String>,
        #[command(flatten)]
        class: Class,
    },
    Hsp {
        algebra: String,
        #[command(flatten)]
        class: Class,
    },
    Hs {
        algebra: String,
        #[command(flatten)]
        class: Class,
    },
    /// Full finite-instance check for an SI algebra.
    Jonsson {
        algebra: String,
        #[command(flatten)]
        class: Class,
        #[arg(long)]
        dot: bool,
        /// Append wall time to the report.
        #[arg(long)]
        timing: bool,
    },
    /// SI quotients of an algebra, or with `--groupoids N` every simple
    /// N-element groupoid.
    ScanSi {
        #[arg(required_unless_present = "groupoids")]
        algebra: Option<String>,
        #[arg(long, conflicts_with = "algebra")]
        groupoids: Option<usize>,
        /// Keep only groupoids whose square has a non-modular lattice.
        #[arg(long, requires = "groupoids")]
        non_modular: bool,
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, msg: String) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output::err(EXIT_INPUT, text)
            } else {
                Output::ok(EXIT_OK, text)
            }
        }
    }
}

pub fn run_command(cli: &Cli) -> Output {
    let out = match execute(cli) {
        Ok((code, text)) => Output::ok(code, text),
        Err(Failure::Input(m)) => Output::err(EXIT_INPUT, format!("error: {m}\n")),
        Err(Failure::Core(e)) => Output::err(exit_code(&e), format!("error: {e}\n")),
    };
    match (&cli.out, out.code) {
        (Some(path), EXIT_OK | EXIT_FAIL | EXIT_INCONCLUSIVE) if out.stderr.is_empty() => {
            match std::fs::write(path, &out.stdout) {
                Ok(()) => Output::ok(out.code, String::new()),
                Err(e) => Output::err(EXIT_INPUT, format!("error: {}: {e}\n", path.display())),
            }
        }
        _ => out,
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvariantViolated(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

struct Env {
    algebras: Vec<(String, FiniteAlgebra)>,
    budgets: Budgets,
}

impl Env {
    fn load(cli: &Cli) -> Res<Env> {
        let mut algebras = Vec::new();
        for path in &cli.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let parsed = parse_algebra_file(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            algebras.extend(parsed);
        }
        let mut budgets = Budgets::default();
        if let Some(n) = cli.max_free_size {
            budgets.max_free_size = n;
        }
        if let Some(n) = cli.max_witness_factors {
            budgets.search.max_factors = n;
        }
        if let Some(n) = cli.max_lattice_size {
            budgets.max_lattice_size = n;
        }
        Ok(Env { algebras, budgets })
    }

    fn algebra(&self, name: &str) -> Res<FiniteAlgebra> {
        self.algebras
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a.clone())
            .or_else(|| curated::by_name(name))
            .ok_or_else(|| Failure::Input(format!("unknown algebra `{name}`")))
    }

    fn class(&self, own: &str, c: &Class) -> Res<(Vec<String>, Vec<FiniteAlgebra>)> {
        let names: Vec<String> = if c.class.is_empty() {
            vec![own.to_string()]
        } else {
            c.class.iter().map(|s| s.trim().to_string()).collect()
        };
        let algebras = names.iter().map(|n| self.algebra(n)).collect::<Res<_>>()?;
        Ok((names, algebras))
    }

    fn options(&self, c: &Class) -> DecideOptions {
        DecideOptions {
            modular_assert: c.modular,
            budgets: self.budgets,
        }
    }
}

fn congruence(text: &str, a: &FiniteAlgebra) -> Res<Congruence> {
    let c = parse_congruence(text, a.size())?;
    c.check_compatible(a)?;
    Ok(c)
}

fn monolith_of(a: &FiniteAlgebra, budgets: &Budgets) -> Res<Congruence> {
    monolith_and_si(a, budgets)?
        .monolith
        .ok_or_else(|| Failure::Input("algebra is not subdirectly irreducible; pass --mu".into()))
}

fn execute(cli: &Cli) -> Res<(i32, String)> {
    let env = Env::load(cli)?;
    let mut s = String::new();
    let code = match &cli.command {
        Command::Con { algebra, dot } => {
            let a = env.algebra(algebra)?;
            let l = con_lattice(&a, &env.budgets)?;
            if *dot {
                s.push_str(&lattice_dot(algebra, &l));
            } else {
                let si = laxcal_core::lattice::si_from_lattice(&l);
                let _ = writeln!(s, "algebra: {algebra} (size {})", a.size());
                let _ = writeln!(s, "congruences: {}", l.len());
                let _ = writeln!(s, "modular: {}", yes_no(is_modular_lattice(&l)));
                for (i, c) in l.elements().iter().enumerate() {
                    let mark = if si.monolith.as_ref() == Some(c) {
                        "  monolith"
                    } else {
                        ""
                    };
                    let _ = writeln!(s, "{i}: {c}{mark}");
                }
                for (x, y) in l.hasse_edges() {
                    let _ = writeln!(s, "cover: {x} < {y}");
                }
            }
            EXIT_OK
        }
        Command::Monolith { algebra } => {
            let a = env.algebra(algebra)?;
            let si = monolith_and_si(&a, &env.budgets)?;
            let _ = writeln!(s, "subdirectly irreducible: {}", yes_no(si.is_si));
            match si.monolith {
                Some(m) => {
                    let _ = writeln!(s, "monolith: {m}");
                }
                None => s.push_str("monolith: none\n"),
            }
            EXIT_OK
        }
        Command::Commutator {
            algebra,
            alpha,
            beta,
        } => {
            let a = env.algebra(algebra)?;
            let (x, y) = (congruence(alpha, &a)?, congruence(beta, &a)?);
            let _ = writeln!(
                s,
                "commutator: {}",
                tc_commutator(&a, &x, &y, &env.budgets)?
            );
            EXIT_OK
        }
        Command::Freeint {
            algebra,
            alpha,
            beta,
            class,
        } => {
            let a = env.algebra(algebra)?;
            let (_, k) = env.class(algebra, class)?;
            let (x, y) = (congruence(alpha, &a)?, congruence(beta, &a)?);
            let fi = free_intersection(&a, &x, &y, &k, &env.budgets)?;
            let _ = writeln!(
                s,
                "free algebra: {} elements on {} generators",
                fi.free.algebra().size(),
                fi.free.generators().len()
            );
            let _ = writeln!(s, "free intersection: {}", fi.value);
            EXIT_OK
        }
        Command::Bmu { algebra, mu, alpha } => {
            let a = env.algebra(algebra)?;
            let m = congruence(mu, &a)?;
            let pa = b_mu(&a, &m)?;
            let _ = writeln!(s, "B(mu): {} elements", pa.algebra.size());
            for (i, (x, y)) in pa.pairs.iter().enumerate() {
                let _ = writeln!(s, "{i}: ({x},{y})");
            }
            if let Some(alpha) = alpha {
                let al = congruence(alpha, &a)?;
                let d = delta_congruence(&a, &m, &al)?;
                let _ = writeln!(s, "delta: {d}");
                let _ = writeln!(s, "ker first ∧ delta: {}", pa.first.kernel().meet(&d));
            }
            EXIT_OK
        }
        Command::Laxcent {
            algebra,
            mu,
            alpha,
            class,
        } => {
            let a = env.algebra(algebra)?;
            let (_, k) = env.class(algebra, class)?;
            let m = match mu {
                Some(t) => congruence(t, &a)?,
                None => monolith_of(&a, &env.budgets)?,
            };
            let al = congruence(alpha, &a)?;
            let v = decide_lax_centrality(&a, &m, &al, &k, &env.options(class))?;
            let _ = writeln!(s, "mu: {m}");
            let _ = writeln!(s, "alpha: {al}");
            let _ = writeln!(s, "verdict: {v}");
            match &v {
                CentralityVerdict::Yes { witness, .. } => dump_witness(&mut s, witness),
                CentralityVerdict::Unknown(r) => {
                    for n in &r.notes {
                        let _ = writeln!(s, "note: {n}");
                    }
                }
                CentralityVerdict::No { .. } => {}
            }
            if v.is_unknown() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            }
        }
        Command::Maxcent { algebra, mu, class } => {
            let a = env.algebra(algebra)?;
            let (_, k) = env.class(algebra, class)?;
            let m = match mu {
                Some(t) => congruence(t, &a)?,
                None => monolith_of(&a, &env.budgets)?,
            };
            let r = maximal_lax_centralizers(&a, &m, &k, &env.options(class))?;
            let _ = writeln!(s, "mu: {m}");
            for w in &r.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
            for (c, v) in r.lattice.elements().iter().zip(&r.verdicts) {
                let _ = writeln!(s, "{c}: {v}");
            }
            for (&i, &ok) in r.maximal.iter().zip(&r.confirmed) {
                let _ = writeln!(
                    s,
                    "maximal: {}{}",
                    r.lattice.get(i),
                    if ok { "" } else { " (unconfirmed)" }
                );
            }
            let _ = writeln!(s, "complete: {}", yes_no(r.complete));
            if r.complete {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            }
        }
        Command::Hsp { algebra, class } => {
            let a = env.algebra(algebra)?;
            let (_, k) = env.class(algebra, class)?;
            let c = hsp_membership(&a, &k, &env.budgets)?;
            c.verify(&a, &k)?;
            let _ = writeln!(s, "member: {}", yes_no(c.is_positive()));
            let _ = writeln!(s, "certificate: {c}");
            EXIT_OK
        }
        Command::Hs { algebra, class } => {
            let a = env.algebra(algebra)?;
            let (_, k) = env.class(algebra, class)?;
            let c = hs_class_membership(&a, &k, &env.budgets)?;
            c.verify(&a, &k)?;
            let _ = writeln!(s, "member: {}", yes_no(c.is_positive()));
            let _ = writeln!(s, "certificate: {c}");
            EXIT_OK
        }
        Command::Jonsson {
            algebra,
            class,
            dot,
            timing,
        } => {
            let a = env.algebra(algebra)?;
            let (names, k) = env.class(algebra, class)?;
            let r = jonsson_check(&a, &k, &env.options(class))?.with_names(algebra, &names);
            if *dot {
                s.push_str(&report_dot(&r));
            } else {
                s.push_str(&r.to_string());
                if *timing {
                    let _ = writeln!(s, "elapsed: {:.3}s", r.elapsed.as_secs_f64());
                }
            }
            match r.outcome {
                Status::Pass => EXIT_OK,
                Status::Fail => EXIT_FAIL,
                Status::Inconclusive | Status::NoCompleteMaximal => EXIT_INCONCLUSIVE,
            }
        }
        Command::ScanSi {
            algebra,
            groupoids,
            non_modular,
            limit,
        } => {
            match (algebra, groupoids) {
                (Some(name), _) => {
                    let a = env.algebra(name)?;
                    for (theta, q) in si_quotients(&a, &env.budgets)? {
                        let m = monolith_of(&q, &env.budgets)?;
                        let _ = writeln!(s, "{theta}: size {}, monolith {m}", q.size());
                    }
                }
                (None, Some(n)) => scan_groupoids(&mut s, *n, *non_modular, *limit, &env.budgets)?,
                (None, None) => unreachable!("clap requires one"),
            }
            EXIT_OK
        }
    };
    Ok((code, s))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dump_witness(s: &mut String, w: &LaxWitness) {
    let _ = writeln!(s, "witness C: {} elements", w.algebra.size());
    let _ = writeln!(s, "witness pi: {:?}", w.pi.map());
    let _ = writeln!(s, "witness beta: {}", w.beta);
    let _ = writeln!(s, "witness gamma: {}", w.gamma);
    s.push_str(&serialize_algebras([("C", &w.algebra)]));
}

/// Simple groupoids on `n` elements, tables in lexicographic order.
fn scan_groupoids(
    s: &mut String,
    n: usize,
    non_modular: bool,
    limit: usize,
    budgets: &Budgets,
) -> Res<()> {
    let cells = n * n;
    let count = (n as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if n == 0 || count > budgets.max_map_candidates {
        return Err(Error::BudgetExceeded {
            what: "groupoid tables",
            needed: count,
            limit: budgets.max_map_candidates,
        }
        .into());
    }
    let sig = Signature::new([("mul", 2)])?;
    let mut found = 0;
    for code in 0..count as usize {
        let table: Vec<usize> = (0..cells)
            .map(|i| code / n.pow((cells - 1 - i) as u32) % n)
            .collect();
        let g = make_algebra(sig.clone(), n, vec![table.clone()])?;
        let si = monolith_and_si(&g, budgets)?;
        if !si.monolith.is_some_and(|m| m.is_top()) {
            continue;
        }
        let square = direct_product(&sig, &[&g, &g], budgets)?;
        let modular = is_modular_lattice(&con_lattice(square.algebra(), budgets)?);
        if non_modular && modular {
            continue;
        }
        let _ = writeln!(
            s,
            "{table:?} simple, square {}",
            if modular { "modular" } else { "non-modular" }
        );
        found += 1;
        if found == limit {
            break;
        }
    }
    let _ = writeln!(s, "found: {found}");
    Ok(())
}
