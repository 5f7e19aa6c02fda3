//! Command-line surface for the Klein-bottle braid machinery: classify
//! homotopy classes, generate and verify Borsuk-Ulam witness pairs, rewrite
//! kernel words in the `B`-basis, and replay the identity suites.

pub mod selftest;
pub mod text;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use klein_braid::buc::{classify, generate_witness, verify_witness, Witness};
use klein_braid::kerg::{abelianize, to_b_basis, AbKerG};
use klein_braid::pi1k::{normalize_hom, HomNormalForm, HomPair, Pi1K};
use klein_braid::Error;

use selftest::SelftestConfig;

#[derive(Parser)]
#[command(
    name = "klein-bu",
    about = "Borsuk-Ulam classification of maps from the torus to the Klein bottle, \
             with exact braid-group witnesses",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Classify a homotopy class by its induced homomorphism.
    Classify {
        /// Image of (1,0), written as "(m,n)".
        #[arg(long)]
        f10: String,
        /// Image of (0,1), written as "(m,n)".
        #[arg(long)]
        f01: String,
        #[arg(long)]
        json: bool,
    },
    /// Generate a witness pair for a class without the Borsuk-Ulam property.
    Witness {
        #[arg(long)]
        f10: String,
        #[arg(long)]
        f01: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the three witness conditions for a given pair.
    VerifyWitness {
        #[arg(long)]
        f10: String,
        #[arg(long)]
        f01: String,
        /// Braid element "(word; m, n)".
        #[arg(long)]
        a: String,
        /// Braid element "(word; m, n)".
        #[arg(long)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a kernel word in the B-basis.
    Rewrite { word: String },
    /// Abelianize a kernel word; prints a sorted sparse JSON vector.
    Abelianize { word: String },
    /// Evaluate an expression over braid elements and words.
    Eval { expr: String },
    /// Replay every identity suite deterministically.
    Selftest {
        /// RNG seed (overrides KLEIN_BU_SEED; default 42).
        #[arg(long)]
        seed: Option<u64>,
        /// Randomised cases per suite (default 200).
        #[arg(long)]
        cases: Option<u32>,
    },
}

/// Command failure with its exit code: 1 parse, 2 semantic, 3 selftest.
#[derive(Debug)]
pub enum CmdError {
    Parse(String),
    Semantic(String),
    SelftestFailed(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Parse(_) => 1,
            CmdError::Semantic(_) => 2,
            CmdError::SelftestFailed(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Parse(m) | CmdError::Semantic(m) | CmdError::SelftestFailed(m) => m,
        }
    }
}

fn parse_hom(f10: &str, f01: &str) -> Result<HomPair, CmdError> {
    let f10 = text::parse_pi1k(f10).map_err(CmdError::Parse)?;
    let f01 = text::parse_pi1k(f01).map_err(CmdError::Parse)?;
    HomPair::new(f10, f01).map_err(|e| CmdError::Semantic(e.to_string()))
}

fn normal_form_json(nf: &HomNormalForm) -> Value {
    match *nf {
        HomNormalForm::Type1 { i, s1, s2 }
        | HomNormalForm::Type2 { i, s1, s2 }
        | HomNormalForm::Type3 { i, s1, s2 } => json!({ "i": i, "s1": s1, "s2": s2 }),
        HomNormalForm::Type4 { r1, s1, r2, s2 } => {
            json!({ "r1": r1, "s1": s1, "r2": r2, "s2": s2 })
        }
    }
}

fn classify_json(nf: &HomNormalForm, conjugator: Pi1K) -> Value {
    let verdict = classify(nf);
    json!({
        "type": nf.type_index(),
        "normal_form": normal_form_json(nf),
        "conjugator": [conjugator.m, conjugator.n],
        "borsuk_ulam": verdict.has_bu,
        "reason": verdict.reason.name(),
    })
}

fn classify_text(nf: &HomNormalForm, conjugator: Pi1K) -> String {
    let verdict = classify(nf);
    let pair = nf.pair();
    format!(
        "type: {}\nnormal form: f10 = {}, f01 = {}\nconjugator: {}\nborsuk-ulam: {}\nreason: {}\n",
        nf.type_index(),
        pair.f10(),
        pair.f01(),
        conjugator,
        verdict.has_bu,
        verdict.reason.name()
    )
}

pub fn cmd_classify(f10: &str, f01: &str, json: bool) -> Result<String, CmdError> {
    let h = parse_hom(f10, f01)?;
    let (nf, c) = normalize_hom(&h);
    if json {
        Ok(format!("{}\n", classify_json(&nf, c)))
    } else {
        Ok(classify_text(&nf, c))
    }
}

pub fn cmd_witness(f10: &str, f01: &str, json: bool) -> Result<String, CmdError> {
    let h = parse_hom(f10, f01)?;
    let (nf, c) = normalize_hom(&h);
    let witness = generate_witness(&nf);
    let (status, detail) = match &witness {
        Witness::Generated { a, b } => {
            let verified = verify_witness(&nf.pair(), a, b).all();
            ("Generated", Some((a.clone(), b.clone(), verified)))
        }
        Witness::UnsupportedI1 => ("UnsupportedI1", None),
        Witness::NotApplicableBU => ("NotApplicableBU", None),
    };
    if json {
        let mut value = classify_json(&nf, c);
        let obj = value.as_object_mut().unwrap();
        match &detail {
            Some((a, b, verified)) => {
                obj.insert("a".into(), json!(a.to_string()));
                obj.insert("b".into(), json!(b.to_string()));
                obj.insert("status".into(), json!(status));
                obj.insert("verified".into(), json!(verified));
            }
            None => {
                obj.insert("a".into(), Value::Null);
                obj.insert("b".into(), Value::Null);
                obj.insert("status".into(), json!(status));
                obj.insert("verified".into(), Value::Null);
            }
        }
        Ok(format!("{value}\n"))
    } else {
        let mut out = classify_text(&nf, c);
        out.push_str(&format!("status: {status}\n"));
        if let Some((a, b, verified)) = detail {
            out.push_str(&format!("a = {a}\nb = {b}\nverified: {verified}\n"));
        }
        Ok(out)
    }
}

pub fn cmd_verify_witness(
    f10: &str,
    f01: &str,
    a: &str,
    b: &str,
    json: bool,
) -> Result<String, CmdError> {
    let h = parse_hom(f10, f01)?;
    let a = text::parse_p2elem(a).map_err(CmdError::Parse)?;
    let b = text::parse_p2elem(b).map_err(CmdError::Parse)?;
    let report = verify_witness(&h, &a, &b);
    if json {
        let value = json!({
            "cond_i": report.cond_i,
            "cond_ii": report.cond_ii,
            "cond_iii": report.cond_iii,
            "verified": report.all(),
        });
        Ok(format!("{value}\n"))
    } else {
        Ok(format!(
            "condition (i)   a l_sigma(b) = b a:        {}\n\
             condition (ii)  p1#(a l_sigma(a)) = f10:   {}\n\
             condition (iii) p1#(b) = f01:              {}\n\
             verified: {}\n",
            report.cond_i,
            report.cond_ii,
            report.cond_iii,
            report.all()
        ))
    }
}

fn kernel_error(e: Error) -> CmdError {
    CmdError::Semantic(e.to_string())
}

pub fn cmd_rewrite(word: &str) -> Result<String, CmdError> {
    let w = text::parse_word(word).map_err(CmdError::Parse)?;
    let bw = to_b_basis(&w).map_err(kernel_error)?;
    Ok(format!("{bw}\n"))
}

fn ab_json(ab: &AbKerG) -> Value {
    Value::Array(
        ab.iter()
            .map(|((k, l), c)| json!({ "k": k, "l": l, "c": c }))
            .collect(),
    )
}

pub fn cmd_abelianize(word: &str) -> Result<String, CmdError> {
    let w = text::parse_word(word).map_err(CmdError::Parse)?;
    let bw = to_b_basis(&w).map_err(kernel_error)?;
    Ok(format!("{}\n", ab_json(&abelianize(&bw))))
}

pub fn cmd_eval(expr: &str) -> Result<String, CmdError> {
    let v = text::eval_expr(expr).map_err(CmdError::Parse)?;
    Ok(format!("{v}\n"))
}

pub fn cmd_selftest(seed: Option<u64>, cases: Option<u32>) -> Result<String, CmdError> {
    let env_seed = std::env::var("KLEIN_BU_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok());
    let cfg = SelftestConfig {
        seed: seed.or(env_seed).unwrap_or(42),
        cases: cases.unwrap_or(200).max(1),
        ..SelftestConfig::default()
    };
    let (text, ok) = selftest::report(&cfg);
    if ok {
        Ok(text)
    } else {
        Err(CmdError::SelftestFailed(text))
    }
}

/// Dispatches a parsed command; the returned string goes to stdout.
pub fn run(command: Command) -> Result<String, CmdError> {
    match command {
        Command::Classify { f10, f01, json } => cmd_classify(&f10, &f01, json),
        Command::Witness { f10, f01, json } => cmd_witness(&f10, &f01, json),
        Command::VerifyWitness {
            f10,
            f01,
            a,
            b,
            json,
        } => cmd_verify_witness(&f10, &f01, &a, &b, json),
        Command::Rewrite { word } => cmd_rewrite(&word),
        Command::Abelianize { word } => cmd_abelianize(&word),
        Command::Eval { expr } => cmd_eval(&expr),
        Command::Selftest { seed, cases } => cmd_selftest(seed, cases),
    }
}
