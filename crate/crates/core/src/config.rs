//! Experiment configuration: a flat `key = value` document.
//!
//! One pair per line, `#` starts a comment, blank lines ignored. The
//! instance comes either from a named environment (`env = g1`) or an
//! explicit weight list (`theta = 1.0, 0.8, ...`, optionally with a
//! redundant `n` for cross-checking). Unknown and duplicate keys are
//! errors so typos cannot silently fall back to defaults.

use crate::env::environment;
use crate::error::{Error, Result};
use crate::mnl::MnlInstance;
use crate::regret::Objective;
use crate::stats::check_alpha;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

/// Which policy plays the rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Winner-objective max-min confidence-bound selection.
    MaxMin,
    /// Top-k max-min selection with per-position holdings.
    RecMaxMin,
    /// Thompson-sampling baseline.
    SpTs,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::MaxMin => write!(f, "maxmin"),
            Algorithm::RecMaxMin => write!(f, "rec-maxmin"),
            Algorithm::SpTs => write!(f, "sp-ts"),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxmin" => Ok(Algorithm::MaxMin),
            "rec-maxmin" => Ok(Algorithm::RecMaxMin),
            "sp-ts" => Ok(Algorithm::SpTs),
            other => Err(Error::InvalidParameter(format!(
                "unknown algorithm '{other}' (valid: maxmin, rec-maxmin, sp-ts)"
            ))),
        }
    }
}

/// A parsed experiment description. Defaults: `m = 1`, `horizon = 100000`,
/// `runs = 50`, `seed = 1`, `alpha = 0.51`, `checkpoints = 500`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Named preset; mutually exclusive with `theta`.
    pub env: Option<String>,
    /// Explicit weights; mutually exclusive with `env`.
    pub theta: Option<Vec<f64>>,
    pub algorithm: Algorithm,
    pub objective: Objective,
    /// Played subset size (cap for the winner objective).
    pub k: usize,
    /// Feedback prefix length where the algorithm uses one.
    pub m: usize,
    /// Number of rounds per run.
    pub horizon: u64,
    /// Independent repetitions.
    pub runs: usize,
    /// Base seed; run r uses `seed + r`.
    pub seed: u64,
    /// Exploration parameter.
    pub alpha: f64,
    /// Target number of regret checkpoints.
    pub checkpoints: usize,
    /// Output directory for emitted files.
    pub out: Option<String>,
}

impl ExperimentConfig {
    /// Parses the `key = value` document. Syntax and type errors carry the
    /// 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut env: Option<String> = None;
        let mut theta: Option<Vec<f64>> = None;
        let mut n_check: Option<usize> = None;
        let mut algorithm: Option<Algorithm> = None;
        let mut objective: Option<Objective> = None;
        let mut k: Option<usize> = None;
        let mut m: Option<usize> = None;
        let mut horizon: Option<u64> = None;
        let mut runs: Option<usize> = None;
        let mut seed: Option<u64> = None;
        let mut alpha: Option<f64> = None;
        let mut checkpoints: Option<usize> = None;
        let mut out: Option<String> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(Error::Config {
                    line,
                    msg: format!("expected 'key = value', got '{content}'"),
                });
            };
            let key = key.trim();
            let value = value.trim();
            if value.is_empty() {
                return Err(Error::Config { line, msg: format!("empty value for '{key}'") });
            }

            fn put<T>(slot: &mut Option<T>, v: T, key: &str, line: usize) -> Result<()> {
                if slot.is_some() {
                    return Err(Error::Config { line, msg: format!("duplicate key '{key}'") });
                }
                *slot = Some(v);
                Ok(())
            }
            let bad = |what: &str| Error::Config {
                line,
                msg: format!("invalid {what} '{value}' for '{key}'"),
            };

            match key {
                "env" => put(&mut env, value.to_string(), key, line)?,
                "theta" => {
                    let parsed: std::result::Result<Vec<f64>, _> =
                        value.split(',').map(|p| p.trim().parse::<f64>()).collect();
                    put(&mut theta, parsed.map_err(|_| bad("weight list"))?, key, line)?;
                }
                "n" => put(
                    &mut n_check,
                    value.parse().map_err(|_| bad("count"))?,
                    key,
                    line,
                )?,
                "algorithm" => put(
                    &mut algorithm,
                    value.parse().map_err(|_| Error::Config {
                        line,
                        msg: format!(
                            "unknown algorithm '{value}' (valid: maxmin, rec-maxmin, sp-ts)"
                        ),
                    })?,
                    key,
                    line,
                )?,
                "objective" => put(
                    &mut objective,
                    value.parse().map_err(|_| Error::Config {
                        line,
                        msg: format!("unknown objective '{value}' (valid: winner, top-k)"),
                    })?,
                    key,
                    line,
                )?,
                "k" => put(&mut k, value.parse().map_err(|_| bad("count"))?, key, line)?,
                "m" => put(&mut m, value.parse().map_err(|_| bad("count"))?, key, line)?,
                "horizon" => {
                    put(&mut horizon, value.parse().map_err(|_| bad("count"))?, key, line)?
                }
                "runs" => put(&mut runs, value.parse().map_err(|_| bad("count"))?, key, line)?,
                "seed" => put(&mut seed, value.parse().map_err(|_| bad("count"))?, key, line)?,
                "alpha" => {
                    put(&mut alpha, value.parse().map_err(|_| bad("number"))?, key, line)?
                }
                "checkpoints" => {
                    put(&mut checkpoints, value.parse().map_err(|_| bad("count"))?, key, line)?
                }
                "out" => put(&mut out, value.to_string(), key, line)?,
                other => {
                    return Err(Error::Config { line, msg: format!("unknown key '{other}'") })
                }
            }
        }

        match (&env, &theta) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "give either 'env' or 'theta', not both".to_string(),
                ))
            }
            (None, None) => {
                return Err(Error::InvalidParameter(
                    "one of 'env' or 'theta' is required".to_string(),
                ))
            }
            _ => {}
        }
        if let Some(n) = n_check {
            match &theta {
                Some(t) if t.len() != n => {
                    return Err(Error::InvalidParameter(format!(
                        "n = {n} does not match the {} weights given",
                        t.len()
                    )))
                }
                Some(_) => {}
                None => {
                    return Err(Error::InvalidParameter(
                        "'n' is only meaningful next to 'theta'".to_string(),
                    ))
                }
            }
        }
        let require = |name: &str| Error::InvalidParameter(format!("missing required key '{name}'"));
        Ok(Self {
            env,
            theta,
            algorithm: algorithm.ok_or_else(|| require("algorithm"))?,
            objective: objective.ok_or_else(|| require("objective"))?,
            k: k.ok_or_else(|| require("k"))?,
            m: m.unwrap_or(1),
            horizon: horizon.unwrap_or(100_000),
            runs: runs.unwrap_or(50),
            seed: seed.unwrap_or(1),
            alpha: alpha.unwrap_or(0.51),
            checkpoints: checkpoints.unwrap_or(500),
            out,
        })
    }

    /// Builds the instance this config plays against.
    pub fn instance(&self) -> Result<MnlInstance> {
        match (&self.env, &self.theta) {
            (Some(name), None) => environment(name),
            (None, Some(theta)) => MnlInstance::new(theta.clone()),
            _ => Err(Error::InvalidParameter(
                "config needs exactly one of 'env' and 'theta'".to_string(),
            )),
        }
    }

    /// Full semantic validation: instance buildable, parameters in range,
    /// algorithm and objective compatible.
    pub fn validate(&self) -> Result<()> {
        let inst = self.instance()?;
        let n = inst.n();
        check_alpha(self.alpha)?;
        if self.k == 0 || self.k > n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= n, got k = {}, n = {n}",
                self.k
            )));
        }
        if self.horizon == 0 {
            return Err(Error::InvalidParameter("horizon must be >= 1".to_string()));
        }
        if self.runs == 0 {
            return Err(Error::InvalidParameter("runs must be >= 1".to_string()));
        }
        if self.checkpoints == 0 {
            return Err(Error::InvalidParameter("checkpoints must be >= 1".to_string()));
        }
        match self.algorithm {
            Algorithm::MaxMin => {
                if self.objective != Objective::Winner {
                    return Err(Error::InvalidParameter(
                        "algorithm 'maxmin' serves the winner objective only".to_string(),
                    ));
                }
                if self.m == 0 || self.m + 1 > self.k {
                    return Err(Error::InvalidParameter(format!(
                        "maxmin needs 1 <= m <= k - 1, got m = {}, k = {}",
                        self.m, self.k
                    )));
                }
            }
            Algorithm::RecMaxMin => {
                if self.objective != Objective::TopK {
                    return Err(Error::InvalidParameter(
                        "algorithm 'rec-maxmin' serves the top-k objective only".to_string(),
                    ));
                }
                if self.k < 2 || self.k >= n {
                    return Err(Error::InvalidParameter(format!(
                        "rec-maxmin needs 2 <= k <= n - 1, got k = {}, n = {n}",
                        self.k
                    )));
                }
            }
            Algorithm::SpTs => {
                if self.objective == Objective::Winner && (self.m == 0 || self.m > self.k) {
                    return Err(Error::InvalidParameter(format!(
                        "sp-ts under the winner objective needs 1 <= m <= k, got m = {}, k = {}",
                        self.m, self.k
                    )));
                }
            }
        }
        Ok(())
    }

    /// Canonical echo of the config; [`parse`](Self::parse) reproduces the
    /// config exactly from it.
    pub fn render(&self) -> String {
        let mut s = String::from("# experiment configuration\n");
        if let Some(env) = &self.env {
            let _ = writeln!(s, "env = {env}");
        }
        if let Some(theta) = &self.theta {
            let _ = writeln!(s, "n = {}", theta.len());
            let list = theta.iter().map(f64::to_string).collect::<Vec<_>>().join(", ");
            let _ = writeln!(s, "theta = {list}");
        }
        let _ = writeln!(s, "algorithm = {}", self.algorithm);
        let _ = writeln!(s, "objective = {}", self.objective);
        let _ = writeln!(s, "k = {}", self.k);
        let _ = writeln!(s, "m = {}", self.m);
        let _ = writeln!(s, "horizon = {}", self.horizon);
        let _ = writeln!(s, "runs = {}", self.runs);
        let _ = writeln!(s, "seed = {}", self.seed);
        let _ = writeln!(s, "alpha = {}", self.alpha);
        let _ = writeln!(s, "checkpoints = {}", self.checkpoints);
        if let Some(out) = &self.out {
            let _ = writeln!(s, "out = {out}");
        }
        s
    }

    /// Short stem for output file names, derived from the experiment.
    pub fn file_stem(&self) -> String {
        let inst = match &self.env {
            Some(name) => name.clone(),
            None => "custom".to_string(),
        };
        format!("{}-{}-{}-k{}-m{}", self.algorithm, inst, self.objective, self.k, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_text() -> &'static str {
        "# demo\n\
         env = g1\n\
         algorithm = maxmin\n\
         objective = winner\n\
         k = 10\n\
         m = 5\n"
    }

    #[test]
    fn parses_with_defaults() {
        let cfg = ExperimentConfig::parse(base_text()).unwrap();
        assert_eq!(cfg.env.as_deref(), Some("g1"));
        assert_eq!(cfg.algorithm, Algorithm::MaxMin);
        assert_eq!(cfg.objective, Objective::Winner);
        assert_eq!(cfg.k, 10);
        assert_eq!(cfg.m, 5);
        assert_eq!(cfg.horizon, 100_000);
        assert_eq!(cfg.runs, 50);
        assert_eq!(cfg.seed, 1);
        assert_eq!(cfg.alpha, 0.51);
        assert_eq!(cfg.checkpoints, 500);
        assert!(cfg.out.is_none());
        cfg.validate().unwrap();
    }

    #[test]
    fn comments_and_spacing_are_tolerated() {
        let text = "  env=g4   # inline comment\n\n# full line\nalgorithm =sp-ts\nobjective= top-k\nk = 6\n";
        let cfg = ExperimentConfig::parse(text).unwrap();
        assert_eq!(cfg.env.as_deref(), Some("g4"));
        assert_eq!(cfg.algorithm, Algorithm::SpTs);
        assert_eq!(cfg.objective, Objective::TopK);
    }

    #[test]
    fn explicit_weights_with_matching_n() {
        let text = "n = 3\ntheta = 1.0, 0.5, 0.25\nalgorithm = sp-ts\nobjective = winner\nk = 2\nm = 1\n";
        let cfg = ExperimentConfig::parse(text).unwrap();
        assert_eq!(cfg.theta, Some(vec![1.0, 0.5, 0.25]));
        assert_eq!(cfg.instance().unwrap().n(), 3);
        cfg.validate().unwrap();
    }

    #[test]
    fn render_round_trips() {
        let mut cfg = ExperimentConfig::parse(base_text()).unwrap();
        cfg.out = Some("results".to_string());
        assert_eq!(ExperimentConfig::parse(&cfg.render()).unwrap(), cfg);

        let text = "theta = 0.30000000000000004, 0.1, 2.5\nalgorithm = rec-maxmin\nobjective = top-k\nk = 2\nseed = 7\n";
        let cfg = ExperimentConfig::parse(text).unwrap();
        assert_eq!(ExperimentConfig::parse(&cfg.render()).unwrap(), cfg);
    }

    #[test]
    fn rejects_malformed_lines_with_line_numbers() {
        let err = ExperimentConfig::parse("env = g1\nwhat is this\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = ExperimentConfig::parse("env = g1\nk = ten\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = ExperimentConfig::parse("env = g1\nenv = g4\n").unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
        let err = ExperimentConfig::parse("env = g1\nmode = fast\n").unwrap_err();
        assert!(err.to_string().contains("unknown key"), "{err}");
        let err = ExperimentConfig::parse("env = g1\nk =\n").unwrap_err();
        assert!(err.to_string().contains("empty value"), "{err}");
    }

    #[test]
    fn rejects_inconsistent_instance_declarations() {
        assert!(ExperimentConfig::parse(
            "env = g1\ntheta = 1.0, 0.5\nalgorithm = sp-ts\nobjective = winner\nk = 1\n"
        )
        .is_err());
        assert!(ExperimentConfig::parse("algorithm = sp-ts\nobjective = winner\nk = 1\n").is_err());
        assert!(ExperimentConfig::parse(
            "n = 4\ntheta = 1.0, 0.5\nalgorithm = sp-ts\nobjective = winner\nk = 1\n"
        )
        .is_err());
        assert!(ExperimentConfig::parse(
            "n = 4\nenv = g1\nalgorithm = sp-ts\nobjective = winner\nk = 1\n"
        )
        .is_err());
    }

    #[test]
    fn missing_required_keys_are_named() {
        let err = ExperimentConfig::parse("env = g1\nobjective = winner\nk = 2\n").unwrap_err();
        assert!(err.to_string().contains("algorithm"), "{err}");
        let err =
            ExperimentConfig::parse("env = g1\nalgorithm = maxmin\nobjective = winner\n").unwrap_err();
        assert!(err.to_string().contains("'k'"), "{err}");
    }

    #[test]
    fn compatibility_rules() {
        let parse = |alg: &str, obj: &str, k: usize, m: usize| {
            ExperimentConfig::parse(&format!(
                "env = g1\nalgorithm = {alg}\nobjective = {obj}\nk = {k}\nm = {m}\n"
            ))
            .unwrap()
        };
        assert!(parse("maxmin", "top-k", 10, 5).validate().is_err());
        assert!(parse("maxmin", "winner", 10, 10).validate().is_err());
        assert!(parse("rec-maxmin", "winner", 10, 1).validate().is_err());
        assert!(parse("rec-maxmin", "top-k", 16, 1).validate().is_err());
        assert!(parse("rec-maxmin", "top-k", 10, 1).validate().is_ok());
        assert!(parse("sp-ts", "winner", 10, 11).validate().is_err());
        assert!(parse("sp-ts", "top-k", 10, 1).validate().is_ok());
        assert!(parse("maxmin", "winner", 10, 5).validate().is_ok());
        // Out-of-range shared parameters.
        let mut cfg = parse("maxmin", "winner", 17, 5);
        assert!(cfg.validate().is_err());
        cfg.k = 10;
        cfg.alpha = 0.5;
        assert!(cfg.validate().is_err());
        cfg.alpha = 0.51;
        cfg.runs = 0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn unknown_environment_fails_validation() {
        let cfg = ExperimentConfig::parse(
            "env = g9\nalgorithm = sp-ts\nobjective = winner\nk = 1\n",
        )
        .unwrap();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn file_stem_is_descriptive() {
        let cfg = ExperimentConfig::parse(base_text()).unwrap();
        assert_eq!(cfg.file_stem(), "maxmin-g1-winner-k10-m5");
    }
}
