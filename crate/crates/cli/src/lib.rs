//! The `sfs` command-line tool.
//!
//! Exit status: `0` success (or equal quotient sets), `1` usage or input
//! error, `2` quotient sets differ (a witness class is printed), `3` search
//! budget exceeded.

pub mod grammar;

use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sfs_core::fp::{
    abelian_invariants, direct_with_z, parse_word, presentation_sfs, stabilization_iso, FpError, FreeAutomorphism,
    Presentation, Word,
};
use sfs_core::quotient::{
    g_n, hom_count_signature, quotient_set, Budget, Comparison, QuotientError, QuotientSet, Side,
};
use sfs_core::seifert::{
    self, classify, family_enumerate, find_distinguishing_k, is_homeomorphic, lens_invariants, power_monodromy,
    residue_family, Geometry, Parity, SeifertError,
};
use sfs_core::{BigInt, Sfs};

pub use grammar::{format_sfs, parse_sfs, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNEQUAL: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const EXIT_CODES: &str = "Exit status: 0 success or equal sets, 1 usage or input error, \
2 quotient sets differ (witness printed), 3 search budget exceeded.";

#[derive(Debug, Parser)]
#[command(name = "sfs", version, about = "Seifert invariants and finite quotients", after_help = EXIT_CODES)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of search-tree nodes for quotient enumeration.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GroupInput {
    /// Seifert data (`SFS(g=.., s=..[, b=..]; β/α, ..)` or `(b; β/α, ..)`) or a
    /// presentation `< gens | relators >`.
    pub input: String,
    /// Replace the manifold by the one with monodromy raised to this power.
    #[arg(long, allow_hyphen_values = true)]
    pub power: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler number, orbifold Euler characteristic, monodromy order, type.
    Classify { manifold: String },
    /// Orientation reversal.
    Reverse { manifold: String },
    /// Seifert data of the mapping torus of the k-th power of the monodromy.
    Power {
        manifold: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Fiber-preserving homeomorphism test.
    Homeo {
        first: String,
        second: String,
        /// Require the homeomorphism to preserve orientation.
        #[arg(long)]
        oriented: bool,
    },
    /// Smallest k whose monodromy power gives a non-homeomorphic manifold.
    Distinguish { manifold: String },
    /// Unoriented classes of two-fiber knot spaces over the disk.
    Family { alpha1: String, alpha2: String },
    /// The closed manifold with fibers at the quadratic residues mod p.
    ResidueFamily { p: String },
    /// Lens space obtained by closing a two-fiber knot space.
    Lens {
        manifold: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Fundamental-group presentation.
    Present {
        #[command(flatten)]
        group: GroupInput,
        /// Take the direct product with Z.
        #[arg(long)]
        with_z: bool,
    },
    /// Finite quotients up to a bound on the index.
    Quotients {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long, default_value_t = 8)]
        max_index: usize,
        /// Quotients of the group together with its first peripheral subgroup.
        #[arg(long)]
        paired: bool,
    },
    /// Compare finite quotient sets of two groups.
    Compare(CompareArgs),
    /// Compare finite quotient sets of peripheral pairs.
    ComparePairs(CompareArgs),
    /// The quotient by the intersection of all normal subgroups of bounded index.
    Gn {
        #[command(flatten)]
        group: GroupInput,
        #[arg(long, default_value_t = 6)]
        max_index: usize,
    },
    /// Isomorphism between mapping tori of powers of a periodic automorphism,
    /// after a product with Z.
    #[command(name = "lemma21")]
    Stabilize {
        /// Fiber group: free (`< a, b | >`) or a standard surface group.
        #[arg(long)]
        fiber: String,
        /// Images of the generators, separated by ';'.
        #[arg(long)]
        images: String,
        /// Order of the outer automorphism class.
        #[arg(long)]
        order: u64,
        /// Inner witness w with psi^order = conjugation by w.
        #[arg(long, default_value = "1")]
        witness: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Also compare homomorphism counts into all groups up to this order.
        #[arg(long)]
        signature: Option<usize>,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct CompareArgs {
    pub first: String,
    pub second: Option<String>,
    /// Compare against the manifold with the k-th power monodromy instead.
    #[arg(long, allow_hyphen_values = true)]
    pub power: Option<String>,
    #[arg(long, default_value_t = 8)]
    pub max_index: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn status(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SeifertError> for CliError {
    fn from(e: SeifertError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<FpError> for CliError {
    fn from(e: FpError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// What a command produced: text for humans, a payload for `--json`, the
/// canonical forms of any manifolds involved, and the exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub payload: Value,
    pub manifolds: Vec<String>,
    pub status: i32,
}

impl Outcome {
    fn ok(text: String, payload: Value, manifolds: Vec<String>) -> Self {
        Self {
            text,
            payload,
            manifolds,
            status: EXIT_OK,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_cli<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    status,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CliOutput {
                    status,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                let doc = json!({
                    "command": echo,
                    "manifolds": out.manifolds,
                    "result": out.payload,
                    "status": out.status,
                });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                out.text
            };
            CliOutput {
                status: out.status,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let stdout = if cli.json {
                let doc = json!({ "command": echo, "error": e.to_string(), "status": e.status() });
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                String::new()
            };
            CliOutput {
                status: e.status(),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn int(text: &str, what: &str) -> Result<BigInt, CliError> {
    BigInt::from_str(text.trim()).map_err(|_| CliError::Usage(format!("{what} must be an integer, got '{text}'")))
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::default();
    if let Some(nodes) = cli.budget {
        b.max_nodes = nodes;
    }
    b
}

fn rational_text<T: std::fmt::Display>(r: &T) -> String {
    r.to_string()
}

/// A group from either Seifert data or a presentation.
fn group_input(g: &GroupInput) -> Result<(Presentation, Option<Sfs>), CliError> {
    if g.input.trim_start().starts_with('<') {
        if g.power.is_some() {
            return Err(CliError::Usage("--power needs Seifert data, not a presentation".into()));
        }
        return Ok((Presentation::parse(&g.input)?, None));
    }
    let mut m = parse_sfs(&g.input)?;
    if let Some(k) = &g.power {
        m = power_monodromy(&m, &int(k, "k")?)?;
    }
    Ok((presentation_sfs(&m)?, Some(m)))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = budget(cli);
    match &cli.command {
        Command::Classify { manifold } => {
            let m = parse_sfs(manifold)?;
            let c = classify(&m)?;
            let parity = match c.parity {
                Parity::EvenType => "even",
                Parity::OddType => "odd",
            };
            let geometry = match c.geometry {
                Geometry::Spherical => "Spherical",
                Geometry::Euclidean => "Euclidean",
                Geometry::Hyperbolic => "Hyperbolic",
            };
            let e = c.euler_number.as_ref().map(rational_text);
            let mut text = format!("manifold: {m}\n");
            text += &format!("e = {}\n", e.as_deref().unwrap_or("undefined (s > 0)"));
            text += &format!("chi_orb = {}\n", c.orbifold_chi);
            text += &format!("lambda = {}\n", c.lambda);
            text += &format!("parity = {parity}\n");
            text += &format!("geometry = {geometry}\n");
            text += &format!("periodic bundle = {}\n", yes_no(c.is_periodic_bundle));
            if let (Some(g), Some(b)) = (&c.fiber_genus, &c.fiber_boundary_circles) {
                text += &format!("fiber genus = {g}\nfiber boundary circles = {b}\n");
            }
            let payload = json!({
                "euler_number": e,
                "orbifold_chi": c.orbifold_chi.to_string(),
                "lambda": c.lambda.to_string(),
                "parity": parity,
                "geometry": geometry,
                "is_periodic_bundle": c.is_periodic_bundle,
                "fiber_genus": c.fiber_genus.as_ref().map(ToString::to_string),
                "fiber_boundary_circles": c.fiber_boundary_circles.as_ref().map(ToString::to_string),
            });
            Ok(Outcome::ok(text, payload, vec![m.to_string()]))
        }
        Command::Reverse { manifold } => {
            let m = parse_sfs(manifold)?;
            let r = seifert::reverse_orientation(&m);
            Ok(Outcome::ok(
                format!("{r}\n"),
                json!({ "reversed": r.to_string() }),
                vec![m.to_string()],
            ))
        }
        Command::Power { manifold, k } => {
            let m = parse_sfs(manifold)?;
            let p = power_monodromy(&m, &int(k, "k")?)?;
            Ok(Outcome::ok(
                format!("{p}\n"),
                json!({ "k": k, "power": p.to_string() }),
                vec![m.to_string()],
            ))
        }
        Command::Homeo {
            first,
            second,
            oriented,
        } => {
            let (m, n) = (parse_sfs(first)?, parse_sfs(second)?);
            let h = is_homeomorphic(&m, &n, *oriented)?;
            let kind = if *oriented { "oriented" } else { "unoriented" };
            let text = format!("{} ({kind})\n", if h { "homeomorphic" } else { "not homeomorphic" });
            Ok(Outcome::ok(
                text,
                json!({ "homeomorphic": h, "oriented": oriented }),
                vec![m.to_string(), n.to_string()],
            ))
        }
        Command::Distinguish { manifold } => {
            let m = parse_sfs(manifold)?;
            let k = find_distinguishing_k(&m)?;
            let text = match &k {
                Some(k) => format!("k = {k}\npower: {}\n", power_monodromy(&m, k)?),
                None => "none\n".to_string(),
            };
            Ok(Outcome::ok(
                text,
                json!({ "k": k.map(|k| k.to_string()) }),
                vec![m.to_string()],
            ))
        }
        Command::Family { alpha1, alpha2 } => {
            let (a1, a2) = (int(alpha1, "alpha1")?, int(alpha2, "alpha2")?);
            let reps = family_enumerate(&a1, &a2)?;
            let mut text: String = reps.iter().map(|r| format!("{r}\n")).collect();
            text += &format!("count = {}\n", reps.len());
            let names: Vec<String> = reps.iter().map(ToString::to_string).collect();
            Ok(Outcome::ok(
                text,
                json!({ "count": reps.len(), "representatives": names }),
                names,
            ))
        }
        Command::ResidueFamily { p } => {
            let m = residue_family(&int(p, "p")?)?;
            Ok(Outcome::ok(format!("{m}\n"), json!({ "p": p }), vec![m.to_string()]))
        }
        Command::Lens { manifold, b } => {
            let m = parse_sfs(manifold)?;
            let l = lens_invariants(&m, &int(b, "b")?)?;
            let text = format!(
                "p = {}\nq = {}\ngamma1 = {}\ndelta1 = {}\nq formula applied verbatim\n",
                l.p, l.q, l.gamma1, l.delta1
            );
            let payload = json!({
                "p": l.p.to_string(),
                "q": l.q.to_string(),
                "gamma1": l.gamma1.to_string(),
                "delta1": l.delta1.to_string(),
                "q_formula": "verbatim",
            });
            Ok(Outcome::ok(text, payload, vec![m.to_string()]))
        }
        Command::Present { group, with_z } => {
            let (mut p, m) = group_input(group)?;
            if *with_z {
                p = direct_with_z(&p);
            }
            let ab = abelian_invariants(&p);
            let payload = json!({ "presentation": p.to_string(), "abelianization": ab.to_string() });
            Ok(Outcome::ok(
                format!("{p}\n"),
                payload,
                m.iter().map(ToString::to_string).collect(),
            ))
        }
        Command::Quotients {
            group,
            max_index,
            paired,
        } => {
            let (p, m) = group_input(group)?;
            let set = quotient_set(&p, *max_index, *paired, &budget)?;
            let text = format!("{} classes (bound {max_index})\n{set}", set.len());
            Ok(Outcome::ok(
                text,
                set_payload(&set),
                m.iter().map(ToString::to_string).collect(),
            ))
        }
        Command::Compare(args) => compare(args, false, &budget),
        Command::ComparePairs(args) => compare(args, true, &budget),
        Command::Gn { group, max_index } => {
            let (p, m) = group_input(group)?;
            let data = g_n(&p, *max_index, &budget)?;
            let set = quotient_set(&p, *max_index, false, &budget)?;
            let images = data.factors_are_images();
            let covers = data.covers(&set);
            let trivial = data.intersection_is_trivial(&budget)?;
            let text = format!(
                "order of G/G({n}) = {}\nnormal subgroups of index <= {n}: {}\nfactors are images: {}\n\
                 every quotient class is an image: {}\nintersection of bounded-index normal subgroups is trivial: {}\n",
                data.quotient.order(),
                data.factors.len(),
                yes_no(images),
                yes_no(covers),
                yes_no(trivial),
                n = max_index,
            );
            let payload = json!({
                "n": max_index,
                "order": data.quotient.order(),
                "normal_subgroups": data.factors.len(),
                "factors_are_images": images,
                "covers_quotient_set": covers,
                "intersection_trivial": trivial,
            });
            Ok(Outcome::ok(text, payload, m.iter().map(ToString::to_string).collect()))
        }
        Command::Stabilize {
            fiber,
            images,
            order,
            witness,
            k,
            signature,
        } => {
            let fiber = Presentation::parse(fiber)?;
            let words = images
                .split(';')
                .map(|w| parse_word(w, fiber.generators(), 0))
                .collect::<Result<Vec<Word>, _>>()?;
            let witness = parse_word(witness, fiber.generators(), 0)?;
            let psi = FreeAutomorphism::periodic(&fiber, words, *order, witness)?;
            let iso = stabilization_iso(&fiber, &psi, *k)?;
            let b = iso.basis;
            let src = iso.source.presentation();
            let dst = iso.target.presentation();
            let mut text = format!(
                "u = {}, v = {} (u*{} + v*{} = 1), determinant {}\n",
                b.u,
                b.v,
                b.n,
                b.k,
                b.determinant()
            );
            let mut map = serde_json::Map::new();
            for (name, img) in src.generators().iter().zip(&iso.images) {
                let shown = img.display_with(dst.generators()).to_string();
                text += &format!("f({name}) = {shown}\n");
                map.insert(name.clone(), Value::String(shown));
            }
            text += &format!(
                "relator images trivial: {} of {}\n",
                src.relators().len(),
                src.relators().len()
            );
            text += &format!("source: {src}\ntarget: {dst}\n");
            let (ab_src, ab_dst) = (abelian_invariants(src), abelian_invariants(dst));
            text += &format!("abelianization: {ab_src} / {ab_dst}\n");
            let mut payload = json!({
                "k": b.k, "n": b.n, "u": b.u, "v": b.v,
                "determinant": b.determinant(),
                "map": map,
                "relators_verified": src.relators().len(),
                "source": src.to_string(),
                "target": dst.to_string(),
                "abelianization_equal": ab_src == ab_dst,
            });
            if let Some(bound) = signature {
                let (s1, s2) = (
                    hom_count_signature(src, *bound, &budget)?,
                    hom_count_signature(dst, *bound, &budget)?,
                );
                text += &format!("homomorphism counts agree up to order {bound}: {}\n", yes_no(s1 == s2));
                payload["signatures_equal"] = json!(s1 == s2);
            }
            Ok(Outcome::ok(text, payload, Vec::new()))
        }
    }
}

fn set_payload(set: &QuotientSet) -> Value {
    json!({
        "bound": set.bound,
        "paired": set.paired,
        "classes": set.classes.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn compare(args: &CompareArgs, paired: bool, budget: &Budget) -> Result<Outcome, CliError> {
    let first = GroupInput {
        input: args.first.clone(),
        power: None,
    };
    let second = match (&args.second, &args.power) {
        (Some(s), None) => GroupInput {
            input: s.clone(),
            power: None,
        },
        (None, Some(k)) => GroupInput {
            input: args.first.clone(),
            power: Some(k.clone()),
        },
        _ => return Err(CliError::Usage("give either a second group or --power k".into())),
    };
    let (p, m) = group_input(&first)?;
    let (q, n) = group_input(&second)?;
    let a = quotient_set(&p, args.max_index, paired, budget)?;
    let b = quotient_set(&q, args.max_index, paired, budget)?;
    let bound = args.max_index;
    let mut text = String::new();
    let mut payload = json!({ "bound": bound, "paired": paired, "classes": [a.len(), b.len()] });
    if let (Some(m), Some(n)) = (&m, &n) {
        if m.exceptional_kind().is_none() && n.exceptional_kind().is_none() {
            let h = is_homeomorphic(m, n, false)?;
            text += &format!("homeomorphic (unoriented): {}\n", yes_no(h));
            payload["homeomorphic"] = json!(h);
        }
    }
    let status = match a.compare(&b) {
        Comparison::Equal => {
            text += &format!("EQUAL (bound {bound})\n{} classes\n", a.len());
            payload["equal"] = json!(true);
            EXIT_OK
        }
        Comparison::Witness { only_in, class } => {
            let side = match only_in {
                Side::First => "first",
                Side::Second => "second",
            };
            text += &format!("UNEQUAL (bound {bound})\nwitness only in {side}: {class}\n");
            payload["equal"] = json!(false);
            payload["witness"] = json!({ "only_in": side, "class": class.to_string() });
            EXIT_UNEQUAL
        }
    };
    let manifolds = m.iter().chain(&n).map(ToString::to_string).collect();
    Ok(Outcome {
        text,
        payload,
        manifolds,
        status,
    })
}
