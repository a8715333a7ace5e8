use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use coxtype::check::check;
use coxtype::grammar::{parse_datum, parse_orientation_spec, render_datum, render_element_contracted, ParsedDatum};
use coxtype::records::{
    elements, strata_dot, DimRecord, ElementDimRecord, SmoothnessRecord, StrataRecord, StratumSmoothnessRecord,
};
use coxtype::tables::{diff_tables, generate, golden, to_json, GOLDEN_MAX_RANK};
use coxtype_core::admissible::{admissible_set, direct_equality, k_adm, k_adm_0, k_cox};
use coxtype_core::classifier::check_condition_3;
use coxtype_core::classifier::sweep::classify_sweep;
use coxtype_core::dl_reduction::{dim_x_mu_tau_k, DimBound, Reduction};
use coxtype_core::smoothness::{closed_form_singular, smoothness_report, Orientation};
use coxtype_core::strata::strata_poset;
use coxtype_core::CoxeterDatum;

/// Combinatorics of basic loci of Coxeter type.
#[derive(Parser)]
#[command(name = "coxtype", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest total rank swept by `classify` and `tables`.
    #[arg(long, global = true, default_value_t = 5)]
    max_rank: usize,
    /// Largest `<μ, 2ρ>` for which admissible sets are enumerated.
    #[arg(long, global = true, default_value_t = 40)]
    budget: i32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every (σ, μ) class of Coxeter type with its minimal level.
    Classify,
    /// The admissible set of a datum.
    Adm {
        #[arg(long)]
        datum: String,
        /// Restrict to level-zero elements that are minimal in their K-coset.
        #[arg(long)]
        level0: bool,
        /// Restrict further to twisted Coxeter elements.
        #[arg(long)]
        cox: bool,
    },
    /// Dimension of the basic locus.
    Dim {
        #[arg(long)]
        datum: String,
        /// Also list dim X_w(τ) for every element.
        #[arg(long)]
        per_element: bool,
        /// Include the reduction chain of each element.
        #[arg(long)]
        witness: bool,
    },
    /// The stratification and its closure order.
    Strata {
        #[arg(long)]
        datum: String,
        /// Print the Hasse diagram in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Smoothness of stratum closures.
    Smooth {
        #[arg(long)]
        datum: String,
        /// `echelon`, `dual` or `long={..}`; both standard orientations by default.
        #[arg(long)]
        orientation: Option<String>,
        /// Include the verdict and rule trace of every stratum.
        #[arg(long)]
        per_stratum: bool,
    },
    /// Regenerate the classification and orbit tables and compare them with
    /// the golden copies.
    Tables {
        /// Directory to write table1.json and table2.json into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the three characterizations of Coxeter type.
    Check {
        #[arg(long)]
        datum: String,
    },
}

/// Outcome of a subcommand: either completed, or completed with a finding.
enum Outcome {
    Done,
    Discrepancy,
}

type CmdResult = Result<Outcome, String>;

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", text());
    }
}

fn load(text: &str) -> Result<ParsedDatum, String> {
    parse_datum(text).map_err(|e| format!("{text}: {e}"))
}

fn adm_for(d: &CoxeterDatum, budget: i32) -> Result<Vec<coxtype_core::Element>, String> {
    admissible_set(d.group(), d.mu(), budget).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ClassifyRow {
    rank: usize,
    datum: String,
    minimal: Vec<String>,
    unique_minimal: bool,
    coxeter_levels: usize,
}

fn cmd_classify(cli: &Cli) -> CmdResult {
    let rows = classify_sweep(cli.max_rank, cli.budget).map_err(|e| e.to_string())?;
    let mut out: Vec<ClassifyRow> = rows
        .iter()
        .map(|r| {
            let minimal = r
                .minimal
                .iter()
                .map(|&k| render_datum(&r.datum().with_parahoric(k).expect("minimal levels are valid"), None))
                .collect::<Vec<_>>();
            ClassifyRow {
                rank: r.group.rank(),
                datum: minimal[0].clone(),
                unique_minimal: r.has_unique_minimal(),
                minimal,
                coxeter_levels: r.passing.len(),
            }
        })
        .collect();
    out.sort_by(|a, b| (a.rank, &a.datum).cmp(&(b.rank, &b.datum)));
    let unique = out.iter().all(|r| r.unique_minimal);
    emit(cli.json, &out, || {
        let mut s = String::new();
        for r in &out {
            let flag = if r.unique_minimal { "" } else { "  [several minimal levels]" };
            s.push_str(&format!("{}{}\n", r.datum, flag));
        }
        s.push_str(&format!("{} classes of Coxeter type at rank <= {}\n", out.len(), cli.max_rank));
        s
    });
    Ok(if unique { Outcome::Done } else { Outcome::Discrepancy })
}

fn cmd_adm(cli: &Cli, datum: &str, level0: bool, cox: bool) -> CmdResult {
    let d = load(datum)?.datum;
    let adm = adm_for(&d, cli.budget)?;
    let set = if cox {
        k_cox(&d, &adm)
    } else if level0 {
        k_adm_0(&d, &adm)
    } else {
        adm
    };
    let g = d.group();
    emit(cli.json, &elements(g, &set), || set.iter().map(|w| render_element_contracted(g, w) + "\n").collect());
    Ok(Outcome::Done)
}

fn cmd_dim(cli: &Cli, datum: &str, per_element: bool, witness: bool) -> CmdResult {
    let d = load(datum)?.datum;
    let g = d.group();
    let adm = adm_for(&d, cli.budget)?;
    let bound = dim_x_mu_tau_k(&d, &adm).map_err(|e| e.to_string())?;
    let mut record = DimRecord::new(render_datum(&d, None), bound, d.rank_ss_j_tau());
    let mut set = Vec::new();
    if per_element || witness {
        set = match bound {
            DimBound::Exact(_) => k_adm_0(&d, &adm),
            DimBound::LowerBound(_) => k_adm(&d, &adm),
        };
        let mut red = Reduction::for_datum(&d);
        let mut rows = Vec::new();
        for w in &set {
            let (dim, chain) = red.witness(w).map_err(|e| e.to_string())?;
            rows.push(ElementDimRecord::new(g, w, dim, witness.then_some(chain.as_slice())));
        }
        record.per_element = Some(rows);
    }
    emit(cli.json, &record, || {
        let kind = if record.exact { "=" } else { ">=" };
        let mut s = format!("{}\ndim {} {}, rank_ss(J_tau) = {}\n", record.datum, kind, record.dim, record.rank_ss_j_tau);
        for (w, r) in set.iter().zip(record.per_element.iter().flatten()) {
            let dim = r.dim.map_or("empty".to_string(), |x| x.to_string());
            s.push_str(&format!("  {}: {}", render_element_contracted(g, w), dim));
            if let Some(chain) = &r.witness {
                let steps: Vec<String> = chain.iter().map(|st| format!("{}:s{}", st.kind, st.s)).collect();
                s.push_str(&format!("  [{}]", steps.join(" ")));
            }
            s.push('\n');
        }
        s
    });
    Ok(if record.exact && !record.equals_rank { Outcome::Discrepancy } else { Outcome::Done })
}

fn cmd_strata(cli: &Cli, datum: &str, dot: bool) -> CmdResult {
    let d = load(datum)?.datum;
    let adm = adm_for(&d, cli.budget)?;
    let coxeter_type = direct_equality(&d, &adm) && check_condition_3(&d).holds();
    let poset = strata_poset(&d, &adm, coxeter_type).map_err(|e| e.to_string())?;
    let g = d.group();
    if dot {
        print!("{}", strata_dot(g, &poset));
    } else {
        let record = StrataRecord::new(g, render_datum(&d, None), &poset);
        emit(cli.json, &record, || {
            let mut s = format!("{}\n", record.datum);
            for (i, st) in record.strata.iter().enumerate() {
                s.push_str(&format!(
                    "  [{i}] {}  supp {:?}  I {:?}  type {:?}  dim {}\n",
                    st.text, st.support, st.i_set, st.parahoric_type, st.dimension
                ));
            }
            for [a, b] in &record.edges {
                s.push_str(&format!("  [{a}] < [{b}]\n"));
            }
            s
        });
    }
    Ok(if coxeter_type && !poset.injective { Outcome::Discrepancy } else { Outcome::Done })
}

fn cmd_smooth(cli: &Cli, datum: &str, orientation: Option<&str>, per_stratum: bool) -> CmdResult {
    let parsed = load(datum)?;
    let d = parsed.datum;
    let orientations = match (orientation, parsed.orientation) {
        (Some(spec), _) => vec![parse_orientation_spec(spec).map_err(|e| e.to_string())?],
        (None, Some(o)) => vec![o],
        (None, None) => vec![Orientation::Echelon, Orientation::Dual],
    };
    let adm = adm_for(&d, cli.budget)?;
    let dim = dim_x_mu_tau_k(&d, &adm).map_err(|e| e.to_string())?.value();
    let g = d.group();
    let mut records = Vec::new();
    for o in &orientations {
        let report = smoothness_report(&d, &adm, o).map_err(|e| e.to_string())?;
        let predicted = closed_form_singular(&d, o, dim).map_err(|e| e.to_string())?;
        let all_smooth = report.iter().all(|s| s.smooth);
        records.push(SmoothnessRecord {
            datum: render_datum(&d, None),
            orientation: o.label(),
            all_smooth,
            closed_form_singular: predicted,
            agrees: all_smooth != predicted,
            length_identity: report.iter().all(|s| s.length_identity),
            strata: per_stratum.then(|| report.iter().map(|s| StratumSmoothnessRecord::new(g, s)).collect()),
        });
    }
    let ok = records.iter().all(|r| r.agrees && r.length_identity);
    emit(cli.json, &records, || {
        let mut s = String::new();
        for r in &records {
            let verdict = if r.all_smooth { "all strata smooth" } else { "some stratum singular" };
            s.push_str(&format!("{} [{}]: {}\n", r.datum, r.orientation, verdict));
            if !r.agrees {
                s.push_str("  disagrees with the closed-form criterion\n");
            }
            if !r.length_identity {
                s.push_str("  length identity fails\n");
            }
            for st in r.strata.iter().flatten() {
                let rules: Vec<String> = if st.factors.is_empty() {
                    vec![st.rule.clone()]
                } else {
                    st.factors.iter().map(|f| format!("{}:{}", f.rule, if f.smooth { "smooth" } else { "singular" })).collect()
                };
                let verdict = if st.smooth { "smooth" } else { "singular" };
                s.push_str(&format!("  {}: {}  ({})\n", st.text, verdict, rules.join(", ")));
            }
        }
        s
    });
    Ok(if ok { Outcome::Done } else { Outcome::Discrepancy })
}

fn cmd_tables(cli: &Cli, out: Option<&PathBuf>) -> CmdResult {
    let generated = generate(cli.max_rank, cli.budget).map_err(|e| e.to_string())?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        for (name, body) in [("table1.json", to_json(&generated.table1)), ("table2.json", to_json(&generated.table2))] {
            let path = dir.join(name);
            fs::write(&path, body).map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    let compared = cli.max_rank.min(GOLDEN_MAX_RANK);
    let golden = golden(compared).map_err(|e| format!("golden tables: {e}"))?;
    let mut mine = generated.clone();
    mine.table1.retain(|r| r.rank <= compared);
    mine.table2.retain(|r| r.rank <= compared);
    let lines = diff_tables(&golden, &mine);
    if !cli.json {
        println!("table1: {} rows, table2: {} rows", generated.table1.len(), generated.table2.len());
    }
    if lines.is_empty() {
        eprintln!("no differences from the golden tables at rank <= {compared}");
        Ok(Outcome::Done)
    } else {
        for l in &lines {
            eprintln!("{l}");
        }
        Ok(Outcome::Discrepancy)
    }
}

fn cmd_check(cli: &Cli, datum: &str) -> CmdResult {
    let d = load(datum)?.datum;
    let report = check(&d, cli.budget).map_err(|e| e.to_string())?;
    let show = |c: Option<bool>| c.map_or("not computed".to_string(), |b| b.to_string());
    emit(cli.json, &report, || {
        let mut s = format!("{}\n", report.datum);
        s.push_str(&format!("  (1) level-zero elements are Coxeter and condition 3: {}\n", show(report.condition_1)));
        s.push_str(&format!("  (2) dim = rank_ss(J_tau) = {}: {}\n", report.rank_ss_j_tau, show(report.condition_2)));
        s.push_str(&format!("  (3) admissible triples: {}\n", report.condition_3));
        if !report.condition_3 {
            s.push_str(&format!("      witness: {}\n", serde_json::to_string(&report.witness).expect("serializes")));
        }
        if let Some(set) = &report.k_adm_0 {
            s.push_str(&format!("  level-zero set: {{{}}}\n", set.join(", ")));
        }
        for n in &report.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        if !report.consistent {
            s.push_str("  DISAGREEMENT between the conditions\n");
        }
        s
    });
    Ok(if report.consistent { Outcome::Done } else { Outcome::Discrepancy })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify => cmd_classify(&cli),
        Command::Adm { datum, level0, cox } => cmd_adm(&cli, datum, *level0, *cox),
        Command::Dim { datum, per_element, witness } => cmd_dim(&cli, datum, *per_element, *witness),
        Command::Strata { datum, dot } => cmd_strata(&cli, datum, *dot),
        Command::Smooth { datum, orientation, per_stratum } => {
            cmd_smooth(&cli, datum, orientation.as_deref(), *per_stratum)
        }
        Command::Tables { out } => cmd_tables(&cli, out.as_ref()),
        Command::Check { datum } => cmd_check(&cli, datum),
    };
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Discrepancy) => ExitCode::from(2),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
