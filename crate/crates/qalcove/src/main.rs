use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qalcove::core::alcove::{
    counting_fact_holds, enumerate_admissible, gamma0, is_reduced, is_weakly_reduced, lex_chain,
    line_chain, LambdaChain,
};
use qalcove::core::charident::{rhs_chevalley, verify_factorization, verify_vanishing};
use qalcove::core::genfun::{
    compose, compose_ghat, genfun, genfun_equal, ghat, AffineWeylElt, GenFun,
};
use qalcove::core::qbg::{label_increasing_paths, out_edges, reflection_orders};
use qalcove::core::qbops::{
    check_yang_baxter, operator_matrix, tabulated_operator, verify_matrix_props,
};
use qalcove::core::ybmoves::{
    build_sijection, delete_pair, find_yb_segments, insert_pair, yb_transform, YbContext,
};
use qalcove::core::{RootSystem, Weight};
use qalcove::formats::{
    admissible_tsv, formal_char_json, genfun_json, matrix_tsv, qbg_dot, qbg_tsv, sijection_json,
    ChainJson,
};
use qalcove::golden::{
    compare_golden, data_dir, load_errata, matches_up_to_errata, verify_checksums, DATA_DIR_ENV,
};
use qalcove::parse::{coroot, ints, root, root_system, roots, weight, weyl, word_indices};
use qalcove::suite::{self, report_tsv, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "qalcove",
    version,
    about = "Quantum alcove model: construction, enumeration and verification"
)]
struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Also write each report into this directory.
    #[arg(long, global = true, env = "QALCOVE_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    group: Group,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Subcommand)]
enum Group {
    /// Quantum Bruhat graph.
    #[command(subcommand)]
    Qbg(QbgCmd),
    /// λ-chains.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Admissible subsets.
    #[command(subcommand)]
    Adm(AdmCmd),
    /// Yang-Baxter moves and sijections.
    #[command(subcommand)]
    Yb(YbCmd),
    /// Quantum Bruhat operators.
    #[command(subcommand)]
    Ops(OpsCmd),
    /// Generating functions.
    #[command(subcommand)]
    Gf(GfCmd),
    /// Chevalley-type identity.
    #[command(subcommand)]
    Chev(ChevCmd),
    /// Verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Args)]
struct TypeArg {
    #[arg(long = "type")]
    type_label: String,
}

// A chain from `--chain FILE` (or `@FILE`), or the default chain of `--lambda`.
#[derive(Args)]
struct ChainSrc {
    #[arg(long = "type")]
    type_label: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    chain: Option<String>,
}

#[derive(Args)]
struct PointArgs {
    /// Finite part, e.g. `s1s2` or `e`.
    #[arg(long, default_value = "e")]
    w: String,
    /// Translation part in the coroot basis.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    xi: String,
}

#[derive(Subcommand)]
enum QbgCmd {
    /// Quantum Bruhat graph as DOT, TSV or JSON.
    Export(TypeArg),
    /// Counts label-increasing paths for every reflection order.
    ShellCheck(TypeArg),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Construction {
    /// Lex chain when λ is dominant or antidominant, else the straight-line chain.
    Auto,
    Line,
    /// lex(λ+) * lex(λ-).
    Gamma0,
}

#[derive(Subcommand)]
enum ChainCmd {
    /// Builds a chain for λ.
    Lex {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "auto")]
        construction: Construction,
    },
    /// Checks that a chain is a λ-chain.
    Validate {
        #[arg(long)]
        chain: String,
    },
    /// Applies one move; positions are 1-based.
    Transform {
        #[arg(long)]
        chain: String,
        /// Yang-Baxter move on the segment `START,LEN`.
        #[arg(long)]
        yb: Option<String>,
        /// Deletes the pair at positions `U, U+1`.
        #[arg(long)]
        delete: Option<usize>,
        /// Inserts `(beta, -beta)` at position `U`; needs `--root`.
        #[arg(long)]
        insert: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
    },
}

#[derive(Subcommand)]
enum AdmCmd {
    /// Lists the admissible subsets A(w, Γ).
    Enumerate {
        #[command(flatten)]
        src: ChainSrc,
        #[arg(long, default_value = "e")]
        w: String,
    },
    /// Counts admissible subsets, signed and by end element.
    Stats {
        #[command(flatten)]
        src: ChainSrc,
        #[arg(long, default_value = "e")]
        w: String,
    },
}

#[derive(Args)]
struct SegmentArgs {
    /// 1-based first position of the segment.
    #[arg(long)]
    start: usize,
    #[arg(long)]
    len: usize,
}

#[derive(Subcommand)]
enum YbCmd {
    /// Lists segments where a Yang-Baxter move applies.
    Segments {
        #[command(flatten)]
        src: ChainSrc,
    },
    /// Applies a Yang-Baxter move to a segment.
    Apply {
        #[command(flatten)]
        src: ChainSrc,
        #[command(flatten)]
        seg: SegmentArgs,
    },
    /// Builds the sijection for one move and checks it.
    Sijection {
        #[command(flatten)]
        src: ChainSrc,
        #[command(flatten)]
        seg: SegmentArgs,
        #[arg(long, default_value = "e")]
        w: String,
    },
}

#[derive(Subcommand)]
enum OpsCmd {
    /// Matrix of `R_{gamma_1} ... R_{gamma_r}`.
    Matrix {
        #[command(flatten)]
        ty: TypeArg,
        /// Roots separated by `;`, leftmost factor first.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        /// 1-based index into the tabulated operators.
        #[arg(long)]
        tabulated: Option<usize>,
    },
    /// Checks the Yang-Baxter equation for every rank-2 pair.
    YangBaxter(TypeArg),
    /// Checks the multiplicity relations of the tabulated matrices.
    VerifyProps(TypeArg),
    /// Compares the tabulated operators with the golden files.
    Golden {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, env = DATA_DIR_ENV)]
        data_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GfCmd {
    /// Generating function G(x).
    Eval {
        #[command(flatten)]
        src: ChainSrc,
        #[command(flatten)]
        x: PointArgs,
    },
    /// Compares the generating functions of two chains.
    Compare {
        #[command(flatten)]
        src: ChainSrc,
        #[arg(long)]
        chain2: String,
        #[command(flatten)]
        x: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        floor: Option<i64>,
    },
    /// `G_outer(G_inner(x))`, or the Ĝ version with `--hat`.
    Compose {
        #[arg(long = "type")]
        type_label: Option<String>,
        /// Chain file, or a weight whose default chain is used.
        #[arg(long, allow_hyphen_values = true)]
        outer: String,
        #[arg(long, allow_hyphen_values = true)]
        inner: String,
        #[command(flatten)]
        x: PointArgs,
        #[arg(long)]
        hat: bool,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        floor: i64,
    },
    /// Truncated Ĝ(x) down to `--floor`.
    Ghat {
        #[command(flatten)]
        src: ChainSrc,
        #[command(flatten)]
        x: PointArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        floor: i64,
    },
}

#[derive(Subcommand)]
enum ChevCmd {
    /// Right-hand side of the Chevalley-type identity.
    Rhs {
        #[command(flatten)]
        src: ChainSrc,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(flatten)]
        x: PointArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        floor: i64,
    },
    /// The mu = 0 vanishing for every `w`.
    Vanish {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Adds a wall-time column.
        #[arg(long)]
        timings: bool,
    },
    /// Checks the right-hand side over `lex(λ+) * lex(λ-)` against the composed Ĝ.
    Factor {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        x: PointArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
        floor: i64,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Runs the acceptance criteria.
    All {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, env = DATA_DIR_ENV)]
        data_dir: Option<PathBuf>,
        /// Comma-separated criterion numbers; all when omitted.
        #[arg(long)]
        only: Option<String>,
        /// Adds a wall-time column.
        #[arg(long)]
        timings: bool,
    },
}

/// A check ran and failed; exit code 1 rather than 2.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

fn failed(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Failed(msg.into()))
}

struct Out {
    format: Option<Format>,
    dir: Option<PathBuf>,
}

impl Out {
    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!("this command does not support the requested format");
        }
        Ok(f)
    }

    fn emit(&self, name: &str, format: Format, text: &str) -> Result<()> {
        print!("{text}");
        if let Some(dir) = &self.dir {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let ext = match format {
                Format::Json => "json",
                Format::Tsv => "tsv",
                Format::Dot => "dot",
            };
            let path = dir.join(format!("{name}.{ext}"));
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    fn json(&self, name: &str, v: &Value) -> Result<()> {
        self.emit(
            name,
            Format::Json,
            &(serde_json::to_string_pretty(v)? + "\n"),
        )
    }
}

fn read_chain_file(spec: &str) -> Result<(RootSystem, LambdaChain)> {
    let path = spec.strip_prefix('@').unwrap_or(spec);
    let text = fs::read_to_string(path).with_context(|| format!("reading chain file {path}"))?;
    let j: ChainJson =
        serde_json::from_str(&text).with_context(|| format!("parsing chain file {path}"))?;
    j.to_chain().with_context(|| format!("chain file {path}"))
}

fn default_chain(rs: &RootSystem, lambda: &Weight, how: Construction) -> Result<LambdaChain> {
    Ok(match how {
        Construction::Auto if lambda.is_dominant() || lambda.is_antidominant() => {
            lex_chain(rs, lambda)?
        }
        Construction::Auto | Construction::Line => line_chain(rs, lambda)?,
        Construction::Gamma0 => gamma0(rs, lambda)?,
    })
}

impl ChainSrc {
    fn resolve(&self) -> Result<(RootSystem, LambdaChain)> {
        if let Some(spec) = &self.chain {
            let (rs, chain) = read_chain_file(spec)?;
            if let Some(t) = &self.type_label {
                if t != rs.label() {
                    bail!("--type {t} but the chain file is of type {}", rs.label());
                }
            }
            if let Some(l) = &self.lambda {
                if weight(&rs, l)? != *chain.lambda() {
                    bail!(
                        "--lambda {l} but the chain file is for {:?}",
                        chain.lambda().0
                    );
                }
            }
            return Ok((rs, chain));
        }
        let (Some(t), Some(l)) = (&self.type_label, &self.lambda) else {
            bail!("give --chain, or --type with --lambda");
        };
        let rs = root_system(t)?;
        let lambda = weight(&rs, l)?;
        let chain = default_chain(&rs, &lambda, Construction::Auto)?;
        Ok((rs, chain))
    }
}

fn chain_ref(rs: Option<&RootSystem>, spec: &str) -> Result<(RootSystem, LambdaChain)> {
    if spec.starts_with('@') || spec.ends_with(".json") {
        return read_chain_file(spec);
    }
    let rs = rs.ok_or_else(|| anyhow!("a weight {spec:?} needs --type"))?;
    let lambda = weight(rs, spec)?;
    Ok((rs.clone(), default_chain(rs, &lambda, Construction::Auto)?))
}

impl PointArgs {
    fn resolve(&self, rs: &RootSystem) -> Result<AffineWeylElt> {
        Ok(AffineWeylElt::new(
            weyl(rs, &self.w)?,
            coroot(rs, &self.xi)?,
        ))
    }
}

fn chain_value(rs: &RootSystem, chain: &LambdaChain) -> Result<Value> {
    Ok(serde_json::to_value(ChainJson::from_chain(rs, chain))?)
}

fn emit_chain(out: &Out, name: &str, rs: &RootSystem, chain: &LambdaChain) -> Result<()> {
    match out.format(Format::Json, &[Format::Json, Format::Tsv])? {
        Format::Tsv => {
            let mut text = String::from("position\troot\tlevel\n");
            for (k, (r, l)) in chain.roots().iter().zip(chain.levels()).enumerate() {
                text.push_str(&format!("{}\t{:?}\t{}\n", k + 1, rs.coeffs(*r), l));
            }
            out.emit(name, Format::Tsv, &text)
        }
        _ => out.json(name, &chain_value(rs, chain)?),
    }
}

fn emit_genfun(out: &Out, name: &str, rs: &RootSystem, f: &GenFun) -> Result<()> {
    out.format(Format::Json, &[Format::Json])?;
    out.json(name, &serde_json::to_value(genfun_json(rs, f))?)
}

fn segment(seg: &SegmentArgs) -> Result<(usize, usize)> {
    if seg.start == 0 {
        bail!("positions are 1-based");
    }
    Ok((seg.start - 1, seg.len))
}

fn run_qbg(out: &Out, cmd: QbgCmd) -> Result<()> {
    match cmd {
        QbgCmd::Export(t) => {
            let rs = root_system(&t.type_label)?;
            match out.format(Format::Dot, &[Format::Dot, Format::Tsv, Format::Json])? {
                Format::Dot => out.emit("qbg", Format::Dot, &qbg_dot(&rs)),
                Format::Tsv => out.emit("qbg", Format::Tsv, &qbg_tsv(&rs)),
                Format::Json => {
                    let edges: Vec<Value> = rs
                        .weyl_elements()
                        .flat_map(|v| out_edges(&rs, v))
                        .map(|e| {
                            json!({
                                "source": word_indices(&rs, e.source),
                                "target": word_indices(&rs, e.target),
                                "label": rs.coeffs(e.label),
                                "kind": format!("{:?}", e.kind).to_lowercase(),
                            })
                        })
                        .collect();
                    out.json("qbg", &json!({ "type": rs.label(), "edges": edges }))
                }
            }
        }
        QbgCmd::ShellCheck(t) => {
            let rs = root_system(&t.type_label)?;
            let orders = reflection_orders(&rs);
            let mut failures = Vec::new();
            let mut pairs = 0;
            for (i, order) in orders.iter().enumerate() {
                for v in rs.weyl_elements() {
                    for w in rs.weyl_elements() {
                        pairs += 1;
                        let n = label_increasing_paths(&rs, v, w, order).len();
                        if n != 1 {
                            failures.push(json!({"order": i + 1, "v": rs.word_string(v), "w": rs.word_string(w), "paths": n}));
                        }
                    }
                }
            }
            let ok = failures.is_empty();
            out.json(
                "shell-check",
                &json!({"type": rs.label(), "orders": orders.len(), "pairs": pairs, "failures": failures}),
            )?;
            if !ok {
                return Err(failed("some pair has no or several label-increasing paths"));
            }
            Ok(())
        }
    }
}

fn run_chain(out: &Out, cmd: ChainCmd) -> Result<()> {
    match cmd {
        ChainCmd::Lex {
            ty,
            lambda,
            construction,
        } => {
            let rs = root_system(&ty.type_label)?;
            let lambda = weight(&rs, &lambda)?;
            let chain = default_chain(&rs, &lambda, construction)?;
            emit_chain(out, "chain", &rs, &chain)
        }
        ChainCmd::Validate { chain } => {
            let path = chain.strip_prefix('@').unwrap_or(&chain);
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let j: ChainJson =
                serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
            match j.to_chain() {
                Ok((rs, c)) => out.json(
                    "validate",
                    &json!({
                        "valid": true,
                        "length": c.len(),
                        "reduced": is_reduced(&rs, &c),
                        "weakly_reduced": is_weakly_reduced(&rs, &c),
                        "counting_fact": counting_fact_holds(&rs, &c),
                    }),
                ),
                Err(e) => {
                    out.json(
                        "validate",
                        &json!({"valid": false, "reason": format!("{e:#}")}),
                    )?;
                    Err(failed(format!("{e:#}")))
                }
            }
        }
        ChainCmd::Transform {
            chain,
            yb,
            delete,
            insert,
            root: r,
        } => {
            let (rs, c) = read_chain_file(&chain)?;
            let next = match (yb, delete, insert) {
                (Some(s), None, None) => {
                    let v = ints(&s)?;
                    let [start, len] = v[..] else {
                        bail!("--yb takes START,LEN")
                    };
                    if start < 1 || len < 0 {
                        bail!("--yb takes a 1-based start and a length");
                    }
                    yb_transform(&rs, &c, start as usize - 1, len as usize)?
                }
                (None, Some(u), None) if u >= 1 => delete_pair(&rs, &c, u - 1)?,
                (None, None, Some(u)) if u >= 1 => {
                    let beta = root(
                        &rs,
                        r.as_deref()
                            .ok_or_else(|| anyhow!("--insert needs --root"))?,
                    )?;
                    insert_pair(&rs, &c, u - 1, beta)?
                }
                _ => bail!("give exactly one of --yb, --delete, --insert (1-based)"),
            };
            emit_chain(out, "chain", &rs, &next)
        }
    }
}

fn run_adm(out: &Out, cmd: AdmCmd) -> Result<()> {
    match cmd {
        AdmCmd::Enumerate { src, w } => {
            let (rs, chain) = src.resolve()?;
            let w = weyl(&rs, &w)?;
            let subsets = enumerate_admissible(&rs, w, &chain);
            match out.format(Format::Tsv, &[Format::Tsv, Format::Json])? {
                Format::Tsv => out.emit("admissible", Format::Tsv, &admissible_tsv(&rs, &subsets)),
                _ => {
                    let rows: Vec<Value> = subsets
                        .iter()
                        .map(|a| {
                            json!({
                                "indices": a.indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
                                "wt": a.wt().0,
                                "ed": word_indices(&rs, a.ed()),
                                "down": a.down().0,
                                "height": a.height(),
                                "n": a.n(),
                            })
                        })
                        .collect();
                    out.json("admissible", &Value::Array(rows))
                }
            }
        }
        AdmCmd::Stats { src, w } => {
            let (rs, chain) = src.resolve()?;
            let w = weyl(&rs, &w)?;
            let subsets = enumerate_admissible(&rs, w, &chain);
            let signed: i64 = subsets.iter().map(|a| a.sign()).sum();
            let mut by_end = std::collections::BTreeMap::new();
            for a in &subsets {
                *by_end.entry(rs.word_string(a.ed())).or_insert(0usize) += 1;
            }
            out.format(Format::Json, &[Format::Json])?;
            out.json(
                "adm-stats",
                &json!({
                    "count": subsets.len(),
                    "signed_count": signed,
                    "max_height": subsets.iter().map(|a| a.height()).max(),
                    "by_end": by_end,
                    "counting_fact": counting_fact_holds(&rs, &chain),
                }),
            )
        }
    }
}

fn run_yb(out: &Out, cmd: YbCmd) -> Result<()> {
    match cmd {
        YbCmd::Segments { src } => {
            let (rs, chain) = src.resolve()?;
            let segs: Vec<Value> = find_yb_segments(&rs, &chain)
                .iter()
                .map(|s| json!({"start": s.t + 1, "len": s.q, "alpha": rs.coeffs(s.alpha), "beta": rs.coeffs(s.beta)}))
                .collect();
            out.json("segments", &Value::Array(segs))
        }
        YbCmd::Apply { src, seg } => {
            let (rs, chain) = src.resolve()?;
            let (t, q) = segment(&seg)?;
            emit_chain(out, "chain", &rs, &yb_transform(&rs, &chain, t, q)?)
        }
        YbCmd::Sijection { src, seg, w } => {
            let (rs, chain) = src.resolve()?;
            let (t, q) = segment(&seg)?;
            let w = weyl(&rs, &w)?;
            let ctx = YbContext::new(&rs, &chain, t, q)?;
            let s = build_sijection(&rs, &ctx, w).map_err(|e| failed(format!("{e}")))?;
            out.json("sijection", &serde_json::to_value(sijection_json(&rs, &s))?)
        }
    }
}

fn run_ops(out: &Out, cmd: OpsCmd) -> Result<()> {
    match cmd {
        OpsCmd::Matrix {
            ty,
            roots: rts,
            tabulated,
        } => {
            let rs = root_system(&ty.type_label)?;
            let seq = match (rts, tabulated) {
                (Some(s), None) => roots(&rs, &s)?,
                (None, Some(i)) if i >= 1 => tabulated_operator(&rs, i - 1)?,
                _ => bail!("give --roots or a 1-based --tabulated"),
            };
            let m = operator_matrix(&rs, &seq);
            match out.format(Format::Tsv, &[Format::Tsv, Format::Json])? {
                Format::Tsv => out.emit("matrix", Format::Tsv, &matrix_tsv(&m)),
                _ => {
                    let basis: Vec<String> = m.basis().iter().map(|&w| rs.word_string(w)).collect();
                    out.json(
                        "matrix",
                        &json!({"basis": basis, "entries": m.to_strings()}),
                    )
                }
            }
        }
        OpsCmd::YangBaxter(t) => {
            let rs = root_system(&t.type_label)?;
            let all: Vec<_> = rs.roots().collect();
            let (mut pairs, mut bad) = (0, Vec::new());
            for &a in &all {
                for &b in &all {
                    if let Ok(eq) = check_yang_baxter(&rs, a, b) {
                        pairs += 1;
                        if !eq {
                            bad.push(json!([rs.coeffs(a), rs.coeffs(b)]));
                        }
                    }
                }
            }
            let ok = bad.is_empty() && pairs > 0;
            out.json(
                "yang-baxter",
                &json!({"type": rs.label(), "pairs": pairs, "failures": bad}),
            )?;
            if !ok {
                return Err(failed("Yang-Baxter equation fails"));
            }
            Ok(())
        }
        OpsCmd::VerifyProps(t) => {
            let rs = root_system(&t.type_label)?;
            let mut rows = Vec::new();
            let mut ok = true;
            for (i, order) in reflection_orders(&rs).iter().enumerate() {
                for k in 0..=order.len() {
                    let rep = verify_matrix_props(&rs, order, k)?;
                    ok &= rep.passed();
                    let three: Vec<Value> = rep
                        .coefficient_three
                        .iter()
                        .map(|c| json!({"op": format!("{:?}", c.op), "v": rs.word_string(c.v), "w": rs.word_string(c.w)}))
                        .collect();
                    rows.push(json!({"order": i + 1, "k": k, "passed": rep.passed(), "violations": rep.violations, "coefficient_three": three}));
                }
            }
            out.json("verify-props", &json!({"type": rs.label(), "cases": rows}))?;
            if !ok {
                return Err(failed("matrix relations fail"));
            }
            Ok(())
        }
        OpsCmd::Golden { ty, data_dir: dir } => {
            let rs = root_system(&ty.type_label)?;
            let dir = dir.unwrap_or_else(data_dir);
            verify_checksums(&dir)?;
            let errata = load_errata(&dir)?;
            let cmp = compare_golden(&rs, &dir)?;
            let ok = matches_up_to_errata(&cmp, &errata);
            let exact = cmp.iter().filter(|c| c.mismatches.is_empty()).count();
            let files: Vec<Value> = cmp
                .iter()
                .map(|c| {
                    let mm: Vec<Value> = c
                        .mismatches
                        .iter()
                        .map(|m| {
                            let listed = errata.contains_key(&(c.file.clone(), m.row, m.col));
                            json!({"row": m.row, "col": m.col, "printed": m.printed, "computed": m.computed, "erratum": listed})
                        })
                        .collect();
                    json!({"file": c.file, "mismatches": mm})
                })
                .collect();
            out.json(
                "golden",
                &json!({"type": rs.label(), "matrices": cmp.len(), "exact": exact, "match_up_to_errata": ok, "files": files}),
            )?;
            if !ok {
                return Err(failed("golden matrices differ beyond the listed errata"));
            }
            Ok(())
        }
    }
}

fn run_gf(out: &Out, cmd: GfCmd) -> Result<()> {
    match cmd {
        GfCmd::Eval { src, x } => {
            let (rs, chain) = src.resolve()?;
            let x = x.resolve(&rs)?;
            emit_genfun(out, "genfun", &rs, &genfun(&rs, &chain, &x))
        }
        GfCmd::Compare {
            src,
            chain2,
            x,
            floor,
        } => {
            let (rs, c1) = src.resolve()?;
            let (rs2, c2) = read_chain_file(&chain2)?;
            if rs2.label() != rs.label() {
                bail!("chains of different types");
            }
            let x = x.resolve(&rs)?;
            let (f, g) = match floor {
                Some(e) => (ghat(&rs, &c1, &x, e), ghat(&rs, &c2, &x, e)),
                None => (genfun(&rs, &c1, &x), genfun(&rs, &c2, &x)),
            };
            let equal = genfun_equal(&f, &g, floor);
            out.json(
                "compare",
                &json!({"equal": equal, "terms": [f.len(), g.len()]}),
            )?;
            if !equal {
                return Err(failed("generating functions differ"));
            }
            Ok(())
        }
        GfCmd::Compose {
            type_label,
            outer,
            inner,
            x,
            hat,
            floor,
        } => {
            let rs0 = type_label.as_deref().map(root_system).transpose()?;
            let (rs, o) = chain_ref(rs0.as_ref(), &outer)?;
            let (rsi, i) = chain_ref(Some(&rs), &inner)?;
            if rsi.label() != rs.label() {
                bail!("chains of different types");
            }
            let x = x.resolve(&rs)?;
            let f = if hat {
                compose_ghat(&rs, &o, &i, &x, floor)?
            } else {
                compose(&rs, &o, &i, &x)
            };
            emit_genfun(out, "compose", &rs, &f)
        }
        GfCmd::Ghat { src, x, floor } => {
            let (rs, chain) = src.resolve()?;
            let x = x.resolve(&rs)?;
            emit_genfun(out, "ghat", &rs, &ghat(&rs, &chain, &x, floor))
        }
    }
}

fn run_chev(out: &Out, cmd: ChevCmd) -> Result<()> {
    match cmd {
        ChevCmd::Rhs { src, mu, x, floor } => {
            let (rs, chain) = src.resolve()?;
            let mu = weight(&rs, &mu)?;
            let x = x.resolve(&rs)?;
            let f = rhs_chevalley(&rs, &mu, &chain, &x, floor)?;
            out.json(
                "rhs",
                &json!({"mu": mu.0, "floor": floor, "terms": formal_char_json(&rs, &f)}),
            )
        }
        ChevCmd::Vanish {
            ty,
            lambda,
            timings,
        } => {
            let rs = root_system(&ty.type_label)?;
            let lambda = weight(&rs, &lambda)?;
            let chain = lex_chain(&rs, &lambda)?;
            let mut text = String::from(if timings {
                "case\tresult\tmax_abs_q_exp\twall_us\n"
            } else {
                "case\tresult\tmax_abs_q_exp\n"
            });
            let mut ok = true;
            for w in rs.weyl_elements() {
                let start = Instant::now();
                let r = verify_vanishing(&rs, &lambda, w)?;
                let max_exp = enumerate_admissible(&rs, w, &chain)
                    .iter()
                    .map(|a| a.height().abs())
                    .max()
                    .unwrap_or(0);
                ok &= r;
                text.push_str(&format!(
                    "{}\t{}\t{}",
                    rs.word_string(w),
                    if r { "PASS" } else { "FAIL" },
                    max_exp
                ));
                if timings {
                    text.push_str(&format!("\t{}", start.elapsed().as_micros()));
                }
                text.push('\n');
            }
            out.format(Format::Tsv, &[Format::Tsv])?;
            out.emit("vanish", Format::Tsv, &text)?;
            if !ok {
                return Err(failed("antidominant sum does not vanish"));
            }
            Ok(())
        }
        ChevCmd::Factor {
            ty,
            mu,
            lambda,
            x,
            floor,
        } => {
            let rs = root_system(&ty.type_label)?;
            let (mu, lambda) = (weight(&rs, &mu)?, weight(&rs, &lambda)?);
            let x = x.resolve(&rs)?;
            let ok = verify_factorization(&rs, &mu, &lambda, &x, floor)?;
            out.json(
                "factor",
                &json!({"mu": mu.0, "lambda": lambda.0, "floor": floor, "equal": ok}),
            )?;
            if !ok {
                return Err(failed("factorized and direct right-hand sides differ"));
            }
            Ok(())
        }
    }
}

fn run_suite(out: &Out, cmd: SuiteCmd) -> Result<()> {
    let SuiteCmd::All {
        seed,
        data_dir: dir,
        only,
        timings,
    } = cmd;
    let dir = dir.unwrap_or_else(data_dir);
    let rows = match only {
        Some(s) => {
            let ids = ints(&s)?
                .into_iter()
                .map(u8::try_from)
                .collect::<Result<Vec<_>, _>>()?;
            suite::run_selected(&ids, seed, Path::new(&dir))?
        }
        None => suite::run_all(seed, Path::new(&dir)),
    };
    match out.format(Format::Tsv, &[Format::Tsv, Format::Json])? {
        Format::Tsv => out.emit("suite", Format::Tsv, &report_tsv(&rows, timings))?,
        _ => {
            let v: Vec<Value> = rows
                .iter()
                .map(|c| {
                    let mut o = json!({"criterion": c.id, "title": c.title, "passed": c.passed, "cases": c.cases, "detail": c.detail});
                    if timings {
                        o["wall_ms"] = json!(c.elapsed.as_millis() as u64);
                    }
                    o
                })
                .collect();
            out.json("suite", &json!({"seed": seed, "criteria": v}))?
        }
    }
    let failed_ids: Vec<String> = rows
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id.to_string())
        .collect();
    if !failed_ids.is_empty() {
        return Err(failed(format!("criteria {} failed", failed_ids.join(","))));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let out = Out {
        format: cli.format,
        dir: cli.out_dir,
    };
    match cli.group {
        Group::Qbg(c) => run_qbg(&out, c),
        Group::Chain(c) => run_chain(&out, c),
        Group::Adm(c) => run_adm(&out, c),
        Group::Yb(c) => run_yb(&out, c),
        Group::Ops(c) => run_ops(&out, c),
        Group::Gf(c) => run_gf(&out, c),
        Group::Chev(c) => run_chev(&out, c),
        Group::Suite(c) => run_suite(&out, c),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (kind, code) = if e.downcast_ref::<Failed>().is_some() {
                ("verification", 1)
            } else {
                ("usage", 2)
            };
            eprintln!(
                "{}",
                json!({"status": "error", "kind": kind, "message": format!("{e:#}")})
            );
            ExitCode::from(code)
        }
    }
}
