use num_rational::BigRational;
use rayon::prelude::*;

use betatau_core::critical::{tau, tau_curve, tau_jump, thue_morse_base, CurveGrid, TauResult};
use betatau_core::intervals::{classify, lyndon_interval, Base, ClassifyConfig, RegimeKind};
use betatau_core::survivor::count_admissible;
use betatau_core::words::{
    conjugate, count_ordered_factorizations, farey_level, is_farey, is_lyndon, lambda_factorize,
    lambda_product, largest_rotation, smallest_rotation, substitute, BinaryWord, LambdaWord,
};
use betatau_core::{parse_decimal, solve_unit, HighPrecReal};

use crate::args::{Command, Format, GlobalOpts};
use crate::error::{CliError, CliResult};
use crate::report::{Cell, Record, Report};

/// Largest accepted precision in bits.
const MAX_PRECISION: u32 = 1 << 16;
const MAX_DEPTH_CAP: usize = 64;
const MAX_FACTOR_LEN_CAP: usize = 4096;
/// Rows this many grid steps from a jump are marked.
const JUMP_MARGIN_STEPS: i64 = 10;
const JUMP_SUFFIX: &str = "+jump";

/// Validated global settings.
pub struct Settings {
    pub precision: u32,
    pub config: ClassifyConfig,
}

impl Settings {
    pub fn from_opts(opts: &GlobalOpts) -> CliResult<Self> {
        if !(64..=MAX_PRECISION).contains(&opts.precision) {
            return Err(CliError::bad(
                "--precision",
                format!("must be in 64..={MAX_PRECISION}"),
            ));
        }
        if !(1..=MAX_DEPTH_CAP).contains(&opts.max_depth) {
            return Err(CliError::bad(
                "--max-depth",
                format!("must be in 1..={MAX_DEPTH_CAP}"),
            ));
        }
        if !(2..=MAX_FACTOR_LEN_CAP).contains(&opts.max_factor_len) {
            return Err(CliError::bad(
                "--max-factor-len",
                format!("must be in 2..={MAX_FACTOR_LEN_CAP}"),
            ));
        }
        Ok(Self {
            precision: opts.precision,
            config: ClassifyConfig {
                max_depth: opts.max_depth,
                max_factor_len: opts.max_factor_len,
            },
        })
    }
}

fn word_arg(flag: &'static str, text: &str) -> CliResult<BinaryWord> {
    let word: BinaryWord = text.parse().map_err(|e| CliError::bad(flag, e))?;
    if word.is_empty() {
        return Err(CliError::bad(flag, "empty word"));
    }
    Ok(word)
}

fn product_arg(flag: &'static str, text: &str) -> CliResult<LambdaWord> {
    let word = word_arg(flag, text)?;
    lambda_factorize(&word).ok_or_else(|| {
        CliError::bad(
            flag,
            format!("{word} is not a substitution product of Farey words"),
        )
    })
}

fn rational_arg(flag: &'static str, text: &str) -> CliResult<BigRational> {
    parse_decimal(text).map_err(|e| CliError::bad(flag, e))
}

fn base_arg(flag: &'static str, text: &str, precision: u32) -> CliResult<Base> {
    let value = rational_arg(flag, text)?;
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    if value <= one || value > two {
        return Err(CliError::bad(flag, format!("base {text} outside (1, 2]")));
    }
    Base::numeric(HighPrecReal::from_rational(&value, precision))
        .map_err(|e| CliError::bad(flag, e))
}

fn unresolved(rows: &[TauResult]) -> usize {
    rows.iter()
        .filter(|r| r.regime.kind == RegimeKind::Unresolved)
        .count()
}

fn tau_record(row: &TauResult, regime: String) -> Record {
    vec![
        ("beta", Cell::real(&row.beta)),
        ("tau", Cell::real(&row.tau)),
        ("tau_lo", Cell::real(&row.tau_lo)),
        ("tau_hi", Cell::real(&row.tau_hi)),
        ("regime", Cell::Text(regime)),
        ("witness", Cell::text(&row.witness)),
    ]
}

pub fn run_command(command: &Command, settings: &Settings) -> CliResult<Report> {
    let p = settings.precision;
    let config = &settings.config;
    match command {
        Command::Farey { level } => {
            let listing = farey_level(*level).map_err(|e| CliError::bad("--level", e))?;
            let words: Vec<String> = listing.words.iter().map(|w| w.to_string()).collect();
            let text = words.join(" ");
            let record = vec![
                ("level", Cell::Int(*level as u128)),
                ("words", Cell::List(words)),
            ];
            Ok(Report::new(Format::Text, vec![record]).with_text(text))
        }
        Command::Lyndon { check } => {
            let word = word_arg("--check", check)?;
            let product = lambda_factorize(&word);
            let record = vec![
                ("word", Cell::text(&word)),
                ("lyndon", Cell::Bool(is_lyndon(&word)?)),
                ("smallest_rotation", Cell::text(smallest_rotation(&word)?)),
                ("largest_rotation", Cell::text(largest_rotation(&word)?)),
                ("farey", Cell::Bool(is_farey(&word)?)),
                (
                    "factors",
                    product
                        .as_ref()
                        .map_or(Cell::Null, |w| Cell::list(w.factors())),
                ),
                (
                    "conjugate",
                    product.as_ref().map_or(Cell::Null, |w| {
                        conjugate(w.product()).map_or(Cell::Null, Cell::text)
                    }),
                ),
            ];
            Ok(Report::new(Format::Text, vec![record]))
        }
        Command::Sub { words } => {
            let parsed = words
                .iter()
                .map(|w| word_arg("WORDS", w))
                .collect::<CliResult<Vec<_>>>()?;
            let mut product = parsed[0].clone();
            for next in &parsed[1..] {
                product = substitute(&product, next).map_err(|e| CliError::bad("WORDS", e))?;
            }
            let record = vec![
                ("factors", Cell::list(&parsed)),
                ("product", Cell::text(&product)),
            ];
            Ok(Report::new(Format::Text, vec![record]).with_text(product.to_string()))
        }
        Command::Interval { word, factors } => {
            let product = match (word, factors) {
                (_, Some(list)) => {
                    let parsed = list
                        .iter()
                        .map(|w| word_arg("--factors", w))
                        .collect::<CliResult<Vec<_>>>()?;
                    let product =
                        lambda_product(&parsed).map_err(|e| CliError::bad("--factors", e))?;
                    if let Some(text) = word {
                        let given = word_arg("--word", text)?;
                        if given != *product.product() {
                            return Err(CliError::bad(
                                "--word",
                                format!("{given} differs from the product {}", product.product()),
                            ));
                        }
                    }
                    product
                }
                (Some(text), None) => product_arg("--word", text)?,
                (None, None) => {
                    return Err(CliError::bad(
                        "--word",
                        "either --word or --factors is required",
                    ))
                }
            };
            let record = lyndon_interval(&product, p)?;
            let row = vec![
                ("word", Cell::text(record.word.product())),
                ("factors", Cell::list(record.word.factors())),
                ("beta_left", Cell::real(&record.beta_left)),
                ("beta_star", Cell::real(&record.beta_star)),
                ("beta_right", Cell::real(&record.beta_right)),
                (
                    "residuals",
                    Cell::List(record.residuals.iter().map(|r| r.to_decimal(3)).collect()),
                ),
            ];
            Ok(Report::new(Format::Json, vec![row]))
        }
        Command::Classify { beta } => {
            let base = base_arg("--beta", beta, p)?;
            let result = classify(&base, config);
            let count = usize::from(result.kind == RegimeKind::Unresolved);
            let row = vec![
                ("beta", Cell::real(base.value())),
                ("regime", Cell::text(result.kind)),
                ("chain", Cell::list(&result.chain)),
                (
                    "terminal_word",
                    result
                        .terminal_word
                        .as_ref()
                        .map_or(Cell::Null, |w| Cell::text(w.product())),
                ),
                ("depth_reached", Cell::Int(result.depth_reached as u128)),
                ("precision_flag", Cell::Bool(result.precision_flag)),
                ("tau_prefix", Cell::text(&result.tau_prefix)),
            ];
            Ok(Report::new(Format::Json, vec![row]).with_unresolved(count))
        }
        Command::Tau { beta } => {
            let base = base_arg("--beta", beta, p)?;
            let row = tau(&base, config)?;
            let mut record = tau_record(&row, row.regime.kind.to_string());
            record.push(("error_bound", Cell::real(&row.error_bound)));
            record.push((
                "terminal_word",
                row.regime
                    .terminal_word
                    .as_ref()
                    .map_or(Cell::Null, |w| Cell::text(w.product())),
            ));
            let count = unresolved(std::slice::from_ref(&row));
            Ok(Report::new(Format::Json, vec![record]).with_unresolved(count))
        }
        Command::Curve { from, to, step, .. } => {
            let grid = CurveGrid {
                from: rational_arg("--from", from)?,
                to: rational_arg("--to", to)?,
                step: rational_arg("--step", step)?,
            };
            let one = BigRational::from_integer(1.into());
            let two = BigRational::from_integer(2.into());
            if grid.from <= one || grid.from > two {
                return Err(CliError::bad("--from", "must lie in (1, 2]"));
            }
            if grid.to > two || grid.to <= grid.from {
                return Err(CliError::bad("--to", "must lie in (--from, 2]"));
            }
            if grid.step <= BigRational::from_integer(0.into()) {
                return Err(CliError::bad("--step", "must be positive"));
            }
            let rows = tau_curve(&grid, config, p).map_err(|e| CliError::bad("--step", e))?;
            let jumps = jump_points(&rows, p)?;
            let margin = &grid.step * BigRational::from_integer(JUMP_MARGIN_STEPS.into());
            let records = rows
                .iter()
                .map(|row| {
                    let beta = row.beta.to_rational();
                    let near = jumps.iter().any(|j| {
                        let gap = &beta - j;
                        gap <= margin && -gap <= margin
                    });
                    let mut regime = row.regime.kind.to_string();
                    if near {
                        regime.push_str(JUMP_SUFFIX);
                    }
                    tau_record(row, regime)
                })
                .collect();
            Ok(Report::new(Format::Csv, records).with_unresolved(unresolved(&rows)))
        }
        Command::Jump { word } => {
            let product = product_arg("--word", word)?;
            let jump = tau_jump(&product, p)?;
            let row = vec![
                ("word", Cell::text(jump.word.product())),
                ("beta_right", Cell::real(&jump.beta_right)),
                ("tau_at", Cell::real(&jump.tau_at)),
                ("right_limit", Cell::real(&jump.right_limit)),
                ("jump", Cell::real(&(&jump.right_limit - &jump.tau_at))),
            ];
            Ok(Report::new(Format::Json, vec![row]))
        }
        Command::Table1 => {
            let words: Vec<BinaryWord> = farey_level(3)?
                .words
                .into_iter()
                .filter(|w| w.len() >= 2)
                .collect();
            let rows = words
                .par_iter()
                .map(|w| thue_morse_row(w, settings))
                .collect::<CliResult<Vec<_>>>()?;
            let count = rows
                .iter()
                .filter(|(_, kind)| *kind == RegimeKind::Unresolved)
                .count();
            let records = rows.into_iter().map(|(r, _)| r).collect();
            Ok(Report::new(Format::Json, records).with_unresolved(count))
        }
        Command::Dim {
            beta,
            t,
            tau_factor,
            n,
            depth,
        } => {
            if *n == 0 || *n > betatau_core::survivor::MAX_WORD_LEN {
                return Err(CliError::bad(
                    "--n",
                    format!("must be in 1..={}", betatau_core::survivor::MAX_WORD_LEN),
                ));
            }
            if depth < n {
                return Err(CliError::bad("--depth", "must be at least --n"));
            }
            // enough bits for `depth` reliable digits of both boundaries
            let needed =
                u32::try_from(2 * depth + 64).map_err(|_| CliError::bad("--depth", "too large"))?;
            let p = p.max(needed);
            let base = base_arg("--beta", beta, p)?;
            let hole = match (t, tau_factor) {
                (Some(text), _) => HighPrecReal::from_rational(&rational_arg("--t", text)?, p),
                (None, Some(text)) => {
                    let factor =
                        HighPrecReal::from_rational(&rational_arg("--tau-factor", text)?, p);
                    &tau(&base, config)?.tau * &factor
                }
                (None, None) => return Err(CliError::bad("--t", "required")),
            };
            if hole.is_negative() || hole >= HighPrecReal::one(p) {
                return Err(CliError::bad("--t", "hole size must lie in [0, 1)"));
            }
            let profile = count_admissible(&base, &hole, *n, *depth)?;
            let row = vec![
                ("beta", Cell::real(&profile.beta)),
                ("t", Cell::real(&profile.hole)),
                ("n", Cell::Int(profile.n as u128)),
                ("digits_used", Cell::Int(profile.digits_used as u128)),
                ("count_upper", Cell::Int(profile.count_upper)),
                ("count_lower", Cell::Int(profile.count_lower)),
                ("entropy_upper", Cell::float(profile.entropy_upper)),
                ("entropy_lower", Cell::float(profile.entropy_lower)),
                ("dim_upper", Cell::float(profile.dim_upper)),
                ("dim_lower", Cell::float(profile.dim_lower)),
            ];
            Ok(Report::new(Format::Json, vec![row]))
        }
        Command::Factorizations { m } => {
            let count = count_ordered_factorizations(*m).map_err(|e| CliError::bad("--m", e))?;
            let row = vec![("m", Cell::Int(*m as u128)), ("count", Cell::Int(count))];
            Ok(Report::new(Format::Text, vec![row]).with_text(count.to_string()))
        }
        Command::Thuemorse { word } => {
            let word = word_arg("--word", word)?;
            let (record, kind) = thue_morse_row(&word, settings)?;
            let count = usize::from(kind == RegimeKind::Unresolved);
            Ok(Report::new(Format::Json, vec![record]).with_unresolved(count))
        }
    }
}

fn thue_morse_row(word: &BinaryWord, settings: &Settings) -> CliResult<(Record, RegimeKind)> {
    if word.len() < 2 || !is_farey(word)? {
        return Err(CliError::bad(
            "--word",
            format!("{word} is not a Farey word of length at least 2"),
        ));
    }
    let base = thue_morse_base(word, settings.precision)?;
    let kind = tau(&base.base, &settings.config)?.regime.kind;
    let record = vec![
        ("s", Cell::text(word)),
        ("beta", Cell::real(&base.beta_inf)),
        ("tau", Cell::real(&base.tau)),
        ("tau_limit", Cell::real(&base.tau_limit)),
        ("error_bound", Cell::real(&base.error_bound)),
        ("regime", Cell::text(kind)),
    ];
    Ok((record, kind))
}

/// Right endpoints of the Lyndon intervals met along the curve, exactly as rationals.
fn jump_points(rows: &[TauResult], precision: u32) -> CliResult<Vec<BigRational>> {
    let mut words: Vec<&LambdaWord> = rows
        .iter()
        .filter_map(|r| r.regime.terminal_word.as_ref())
        .collect();
    words.sort_by(|a, b| a.product().cmp(b.product()));
    words.dedup_by(|a, b| a.product() == b.product());
    words
        .par_iter()
        .map(|w| {
            let ends = betatau_core::intervals::EndpointExpansions::of(w);
            Ok(solve_unit(&ends.right, precision)?.to_rational())
        })
        .collect()
}
