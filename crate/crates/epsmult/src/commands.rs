//! The subcommands. Each builds a [`Report`] from a [`RunConfig`]; `main`
//! only handles IO and exit codes.

use std::path::Path;

use clap::{Parser, ValueEnum};
use epsmult_core::colength::length_sequence;
use epsmult_core::multiplicity::{
    check_sat_power_containment, epsilon_sequence, leading_difference, swanson_c_search, theorem_a_table, EpsilonEstimate,
};
use epsmult_core::okounkov::{
    check_cone_conditions, delta_volume, gamma_beta, stabilize_beta, Semigroup, WeightVector,
};
use epsmult_core::{BigInt, BigRational, Error as CoreError, GradedFamilySpec, MonomialIdeal};
use serde::Serialize;
use serde_json::Value;

use crate::corpus::corpus;
use crate::error::{CliError, ExitStatus};
use crate::format::{IdealFile, SemigroupFile};
use crate::parse::{parse_ideal, DEFAULT_MAX_DIM};
use crate::report::{decimal, ratio_cells, Cell, Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// e_n = d!·ℓ((I^n)^sat/I^n)/n^d for n ≤ nmax
    Epsilon,
    /// a(J, I) from ℓ(I^k/J^k), k ≤ kmax
    Amao,
    /// a(I^m, (I^m)^sat)/m^d for m ≤ mmax, followed by the epsilon sequence
    TheoremA,
    /// Okounkov-body volumes of a semigroup, or the volume-difference estimate of ε(I)
    OkounkovVolume,
    /// Level counts and cone conditions of a semigroup or of Γ_β(I^•)
    Semigroup,
    /// Saturated-power containment and the grid search for the truncation constant c
    Lemmas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

fn positive_u32() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

/// Everything that determines a report. Serialized verbatim into it.
#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "epsmult", version, about = "Epsilon and Amao multiplicities of monomial ideals")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Ideal as a file path or inline text ("x^2, x*y" or the JSON schema)
    #[arg(short = 'i', long)]
    pub ideal: Option<String>,
    /// Smaller ideal for `amao`
    #[arg(long)]
    pub inner: Option<String>,
    /// Larger ideal for `amao`; defaults to the saturation of the inner ideal
    #[arg(long)]
    pub outer: Option<String>,
    /// Semigroup JSON, as a path or inline
    #[arg(short = 's', long)]
    pub semigroup: Option<String>,
    /// Ambient dimension for human-syntax ideals
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=DEFAULT_MAX_DIM as i64))]
    pub dim: Option<u32>,
    #[arg(long, default_value_t = 20, value_parser = positive_u32())]
    pub nmax: u32,
    #[arg(long, default_value_t = 6, value_parser = positive_u32())]
    pub mmax: u32,
    #[arg(long, default_value_t = 20, value_parser = positive_u32())]
    pub kmax: u32,
    #[arg(long, default_value_t = 4, value_parser = positive_u32())]
    pub beta: u32,
    /// Number of equal trailing differences required before a value is accepted
    #[arg(long, default_value_t = 3, value_parser = positive_u32())]
    pub window: u32,
    /// How many times `okounkov-volume` may double β looking for agreement
    #[arg(long, default_value_t = 3)]
    pub doublings: u32,
    /// Seed for the random corpus
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of random corpus ideals for `lemmas`
    #[arg(long, default_value_t = 0)]
    pub corpus: usize,
    /// Largest power i checked for (I^sat)^i ⊆ (I^i)^sat
    #[arg(long, default_value_t = 4, value_parser = positive_u32())]
    pub imax: u32,
    /// Largest c tried by the truncation search
    #[arg(long, default_value_t = 8, value_parser = positive_u32())]
    pub cmax: u32,
    /// Pairs (m, k) with m·k ≤ this bound are tested
    #[arg(long, default_value_t = 12, value_parser = positive_u32())]
    pub mk_bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<String>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig::parse_from(["epsmult", command.to_possible_value().expect("no skipped variants").get_name()])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub status: ExitStatus,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.report.to_csv(),
            Format::Json => self.report.to_json(),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut ctx = Context::new(cfg)?;
    let status = match cfg.command {
        Command::Epsilon => ctx.epsilon()?,
        Command::Amao => ctx.amao()?,
        Command::TheoremA => ctx.theorem_a()?,
        Command::OkounkovVolume => ctx.okounkov_volume()?,
        Command::Semigroup => ctx.semigroup()?,
        Command::Lemmas => ctx.lemmas()?,
    };
    Ok(Outcome { report: ctx.report, status })
}

/// Reads `arg` as a file when one exists at that path, otherwise as inline text.
fn read_input(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.to_string(), source })
    } else {
        Ok(arg.to_string())
    }
}

struct Context<'a> {
    cfg: &'a RunConfig,
    report: Report,
}

impl<'a> Context<'a> {
    fn new(cfg: &'a RunConfig) -> Result<Self, CliError> {
        let config = serde_json::to_value(cfg).expect("config serializes");
        Ok(Context { cfg, report: Report::new(config) })
    }

    fn ideal_arg(&mut self, name: &str, arg: Option<&String>) -> Result<MonomialIdeal, CliError> {
        let arg = arg.ok_or_else(|| CliError::Usage(format!("{} needs --{name}", self.command_name())))?;
        let ideal = parse_ideal(&read_input(arg)?, self.cfg.dim.map(|d| d as usize), DEFAULT_MAX_DIM)
            .map_err(CliError::Parse)?;
        self.record_input(name, serde_json::to_value(IdealFile::from_ideal(&ideal)).expect("serializes"));
        Ok(ideal)
    }

    fn semigroup_arg(&mut self) -> Result<Semigroup, CliError> {
        let arg = self.cfg.semigroup.as_ref().expect("checked by caller");
        let text = read_input(arg)?;
        let file: SemigroupFile = serde_json::from_str(&text).map_err(|e| {
            CliError::Parse(crate::error::ParseError {
                line: e.line(),
                column: e.column(),
                message: format!("invalid semigroup JSON: {e}"),
            })
        })?;
        self.record_input("semigroup", serde_json::to_value(&file).expect("serializes"));
        file.into_semigroup().map_err(CliError::Usage)
    }

    fn record_input(&mut self, name: &str, value: Value) {
        let cfg = self.report.config.as_object_mut().expect("config is an object");
        let inputs = cfg.entry("inputs").or_insert_with(|| Value::Object(Default::default()));
        inputs.as_object_mut().expect("inputs is an object").insert(name.to_string(), value);
    }

    fn command_name(&self) -> &'static str {
        match self.cfg.command {
            Command::Epsilon => "epsilon",
            Command::Amao => "amao",
            Command::TheoremA => "theorem-a",
            Command::OkounkovVolume => "okounkov-volume",
            Command::Semigroup => "semigroup",
            Command::Lemmas => "lemmas",
        }
    }

    fn core<T>(&self, r: epsmult_core::Result<T>) -> Result<T, CliError> {
        r.map_err(|e| CliError::core(self.command_name(), e))
    }

    fn push_epsilon(&mut self, est: &EpsilonEstimate) {
        let mut t = Table::new("epsilon", &["n", "length", "e_n(num)", "e_n(den)"]);
        for (i, (len, e)) in est.lengths.iter().zip(&est.values).enumerate() {
            let [num, den] = ratio_cells(e);
            t.push(vec![(i + 1).into(), len.into(), num, den]);
        }
        self.report.tables.push(t);
        if let Some(last) = est.last() {
            self.report.summary.push(format!("e_{} = {} ≈ {}", est.n_max(), last, decimal(last)));
        }
    }

    fn epsilon(&mut self) -> Result<ExitStatus, CliError> {
        let ideal = self.ideal_arg("ideal", self.cfg.ideal.as_ref())?;
        let est = self.core(epsilon_sequence(&ideal, self.cfg.nmax))?;
        self.push_epsilon(&est);
        Ok(ExitStatus::Success)
    }

    fn amao(&mut self) -> Result<ExitStatus, CliError> {
        let inner_arg = self.cfg.inner.as_ref().or(self.cfg.ideal.as_ref());
        let inner = self.ideal_arg("inner", inner_arg)?;
        let outer = match self.cfg.outer.as_ref() {
            Some(_) => self.ideal_arg("outer", self.cfg.outer.as_ref())?,
            None => inner.saturate(),
        };
        if !self.core(inner.is_subideal(&outer))? {
            return Err(CliError::core(self.command_name(), CoreError::NotContained));
        }
        let seq = self.core(length_sequence(
            &GradedFamilySpec::powers(inner.clone()),
            &GradedFamilySpec::powers(outer),
            self.cfg.kmax,
        ))?;
        let mut t = Table::new("lengths", &["n", "length"]);
        for (k, len) in seq.iter().enumerate() {
            t.push(vec![(k + 1).into(), len.into()]);
        }
        self.report.tables.push(t);
        let mut result = Table::new("amao", &["a", "stabilized_at", "window"]);
        match leading_difference(&seq, inner.dim(), self.cfg.window as usize) {
            Ok(a) => {
                result.push(vec![(&a.value).into(), a.stabilized_at.into(), a.window.into()]);
                self.report.tables.push(result);
                self.report.summary.push(format!("a = {}", a.value));
                Ok(ExitStatus::Success)
            }
            Err(e @ (CoreError::Inconclusive { .. } | CoreError::SequenceTooShort { .. })) => {
                result.push(vec![Cell::Empty, Cell::Empty, Cell::Empty]);
                self.report.tables.push(result);
                self.report.summary.push(format!("inconclusive: {e}"));
                Ok(ExitStatus::Inconclusive)
            }
            Err(e) => Err(CliError::core(self.command_name(), e)),
        }
    }

    fn theorem_a(&mut self) -> Result<ExitStatus, CliError> {
        let ideal = self.ideal_arg("ideal", self.cfg.ideal.as_ref())?;
        let rows = self.core(theorem_a_table(&ideal, self.cfg.mmax, self.cfg.kmax, self.cfg.window as usize))?;
        let mut t = Table::new("theorem-a", &["m", "a_m", "ratio_num", "ratio_den", "stabilized_at"]);
        let mut status = ExitStatus::Success;
        for row in &rows {
            match (&row.amao, &row.ratio) {
                (Ok(a), Some(r)) => {
                    let [num, den] = ratio_cells(r);
                    t.push(vec![row.m.into(), (&a.value).into(), num, den, a.stabilized_at.into()]);
                }
                (Err(e @ (CoreError::Inconclusive { .. } | CoreError::SequenceTooShort { .. })), _) => {
                    status = ExitStatus::Inconclusive;
                    self.report.summary.push(format!("m = {}: inconclusive: {e}", row.m));
                    t.push(vec![row.m.into(), Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
                }
                (Err(e), _) => return Err(CliError::core(format!("theorem-a at m = {}", row.m), e.clone())),
                (Ok(_), None) => unreachable!("a ratio accompanies every value"),
            }
        }
        self.report.tables.push(t);
        let est = self.core(epsilon_sequence(&ideal, self.cfg.nmax))?;
        self.push_epsilon(&est);
        Ok(status)
    }

    fn okounkov_volume(&mut self) -> Result<ExitStatus, CliError> {
        if self.cfg.semigroup.is_some() {
            let s = self.semigroup_arg()?;
            let vol = self.core(delta_volume(&s, self.cfg.nmax))?;
            let counts = self.core(s.level_counts(self.cfg.nmax))?;
            let exact = match &vol.exact {
                Some(v) => ratio_cells(v).to_vec(),
                None => vec![Cell::Empty, Cell::Empty],
            };
            let mut t = Table::new("volume", &["n", "count", "estimate_num", "estimate_den", "exact_num", "exact_den"]);
            let d = s.dim();
            for (n, &count) in counts.iter().enumerate().skip(1) {
                let est = BigRational::new(BigInt::from(count), BigInt::from(n).pow(d as u32));
                let mut row: Vec<Cell> = vec![n.into(), count.into()];
                row.extend(ratio_cells(&est));
                row.extend(exact.iter().cloned());
                t.push(row);
            }
            self.report.tables.push(t);
            self.report.summary.push(format!("estimate at n = {}: {}", vol.n_used, decimal(&vol.estimate)));
            if let Some(v) = &vol.exact {
                self.report.summary.push(format!("vol = {v} ≈ {}", decimal(v)));
            }
            return Ok(ExitStatus::Success);
        }
        let ideal = self.ideal_arg("ideal", self.cfg.ideal.as_ref())?;
        let w = WeightVector::default_for(ideal.dim());
        let tolerance = BigRational::new(5.into(), self.cfg.nmax.into());
        let stab = self.core(stabilize_beta(&ideal, self.cfg.beta, self.cfg.nmax, &w, &tolerance, self.cfg.doublings))?;
        let mut t = Table::new(
            "volume-difference",
            &["beta", "n_probe", "outer_count", "inner_count", "value_num", "value_den"],
        );
        for v in &stab.trail {
            let mut row: Vec<Cell> = vec![v.beta.into(), v.n_probe.into(), v.outer_count.into(), v.inner_count.into()];
            row.extend(ratio_cells(&v.value));
            t.push(row);
        }
        self.report.tables.push(t);
        let last = &stab.trail.last().expect("at least one β").value;
        match stab.stable_beta {
            Some(b) => {
                self.report.summary.push(format!("stable at beta = {b}: {last} ≈ {}", decimal(last)));
                Ok(ExitStatus::Success)
            }
            None => {
                self.report.summary.push(format!("no two successive beta values agree within {tolerance}"));
                Ok(ExitStatus::Inconclusive)
            }
        }
    }

    fn semigroup(&mut self) -> Result<ExitStatus, CliError> {
        let s = if self.cfg.semigroup.is_some() {
            self.semigroup_arg()?
        } else {
            let ideal = self.ideal_arg("ideal", self.cfg.ideal.as_ref())?;
            let w = WeightVector::default_for(ideal.dim());
            self.core(gamma_beta(&GradedFamilySpec::powers(ideal), self.cfg.beta, self.cfg.nmax, &w))?
        };
        let counts = self.core(s.level_counts(self.cfg.nmax))?;
        let mut t = Table::new("levels", &["n", "count"]);
        for (n, &c) in counts.iter().enumerate() {
            t.push(vec![n.into(), c.into()]);
        }
        self.report.tables.push(t);
        let cone = self.core(check_cone_conditions(&s, self.cfg.beta))?;
        let mut c = Table::new("cone", &["beta", "cone2", "cone3", "lattice_index"]);
        c.push(vec![self.cfg.beta.into(), cone.cone2.into(), cone.cone3.into(), cone.lattice_index.clone().into()]);
        self.report.tables.push(c);
        Ok(ExitStatus::Success)
    }

    fn lemmas(&mut self) -> Result<ExitStatus, CliError> {
        let mut ideals: Vec<(String, MonomialIdeal)> = Vec::new();
        if self.cfg.ideal.is_some() {
            ideals.push(("input".into(), self.ideal_arg("ideal", self.cfg.ideal.as_ref())?));
        }
        for (k, i) in corpus(self.cfg.seed, self.cfg.corpus).into_iter().enumerate() {
            ideals.push((format!("corpus[{k}]"), i));
        }
        let mut t = Table::new("lemmas", &["source", "dim", "ideal", "lemma3", "lemma3_power", "lemma3_witness", "grid_c"]);
        let (mut passed, mut with_c) = (0usize, 0usize);
        let mut input_c = None;
        let mut status = ExitStatus::Success;
        for (source, ideal) in &ideals {
            let check = check_sat_power_containment(ideal, self.cfg.imax);
            let search = swanson_c_search(ideal, self.cfg.cmax, self.cfg.mk_bound)
                .map_err(|e| CliError::core(format!("lemmas on {source}"), e))?;
            if check.passed() {
                passed += 1;
            } else {
                status = ExitStatus::Failure;
            }
            if search.grid_c.is_some() {
                with_c += 1;
            }
            if source == "input" {
                input_c = Some(search.grid_c);
            }
            let (power, witness) = match &check.counterexample {
                Some(c) => (Cell::from(c.power), Cell::Text(format!("{:?}", c.witness.coords()))),
                None => (Cell::Empty, Cell::Empty),
            };
            t.push(vec![
                Cell::Text(source.clone()),
                ideal.dim().into(),
                Cell::Text(ideal.to_string()),
                check.passed().into(),
                power,
                witness,
                search.grid_c.into(),
            ]);
        }
        self.report.tables.push(t);
        let total = ideals.len();
        self.report.summary.push(format!("lemma3: {passed}/{total} pass"));
        if let Some(c) = input_c {
            match c {
                Some(c) => self.report.summary.push(format!("lemma4 grid-c = {c}")),
                None => self.report.summary.push(format!("lemma4 grid-c > {}", self.cfg.cmax)),
            }
        }
        self.report.summary.push(format!("lemma4: {with_c}/{total} with grid-c <= {}", self.cfg.cmax));
        if status != ExitStatus::Success {
            self.report.summary.push("lemma3 counterexample found".into());
        }
        Ok(status)
    }
}
