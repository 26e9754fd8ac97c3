//! Simulation configuration: model selection, physical parameters, grid and
//! time-stepping controls, plus the flat `key = value` config-file format.

use std::fmt;
use std::path::Path;

/// Which model a run integrates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    HalflineSimple,
    HalflineExchange,
    Periodic1d,
    AnnulusTransversal,
    AnnulusPotential,
    AnnulusTransversalExchange,
    AnnulusPotentialExchange,
    Hilbert,
}

impl Model {
    pub const ALL: [Model; 8] = [
        Model::HalflineSimple,
        Model::HalflineExchange,
        Model::Periodic1d,
        Model::AnnulusTransversal,
        Model::AnnulusPotential,
        Model::AnnulusTransversalExchange,
        Model::AnnulusPotentialExchange,
        Model::Hilbert,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Model::HalflineSimple => "halfline-simple",
            Model::HalflineExchange => "halfline-exchange",
            Model::Periodic1d => "periodic1d",
            Model::AnnulusTransversal => "annulus-transversal",
            Model::AnnulusPotential => "annulus-potential",
            Model::AnnulusTransversalExchange => "annulus-transversal-exchange",
            Model::AnnulusPotentialExchange => "annulus-potential-exchange",
            Model::Hilbert => "hilbert",
        }
    }

    pub fn parse(s: &str) -> Result<Model, ConfigError> {
        Model::ALL
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| ConfigError::BadValue {
                key: "model".into(),
                value: s.into(),
                reason: "unknown model name".into(),
            })
    }

    pub fn is_annulus(&self) -> bool {
        matches!(
            self,
            Model::AnnulusTransversal
                | Model::AnnulusPotential
                | Model::AnnulusTransversalExchange
                | Model::AnnulusPotentialExchange
        )
    }

    pub fn has_exchange(&self) -> bool {
        matches!(
            self,
            Model::HalflineExchange
                | Model::AnnulusTransversalExchange
                | Model::AnnulusPotentialExchange
        )
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full run configuration. Field names double as config-file keys (`D`,
/// `chi`, `S`, `alpha`, `k_on`, `k_off`, `M`, `dt`, `t_max`,
/// `snapshot_every`, `seed`, `N_x`, `L`, `N_theta`, `N_r`, `R_min`,
/// `R_max`, `blowup_factor`, `model`).
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub model: Model,
    /// Diffusivity D.
    pub d: f64,
    /// Advection strength χ.
    pub chi: f64,
    /// Membrane modulation S (constant over the boundary).
    pub s: f64,
    /// Degradation rate α in the potential equation.
    pub alpha: f64,
    /// Attachment rate k_on (exchange models).
    pub k_on: f64,
    /// Detachment rate k_off (exchange models).
    pub k_off: f64,
    /// Total marker mass M.
    pub m: f64,
    pub dt: f64,
    pub t_max: f64,
    /// Snapshot/diagnostics cadence in steps.
    pub snapshot_every: usize,
    pub seed: u64,
    /// Half-line cell count.
    pub n_x: usize,
    /// Half-line truncation length.
    pub domain_length: f64,
    /// Angular cell count (circle, annulus, hilbert line proxy).
    pub n_theta: usize,
    /// Radial ring count (annulus).
    pub n_r: usize,
    pub r_min: f64,
    pub r_max: f64,
    /// Sup-norm amplification that counts as blow-up.
    pub blowup_factor: f64,
}

impl SimConfig {
    /// Parameters default to 1 except where a grid or horizon is concerned.
    pub fn defaults(model: Model) -> Self {
        SimConfig {
            model,
            d: 1.0,
            chi: 1.0,
            s: 1.0,
            alpha: 1.0,
            k_on: 1.0,
            k_off: 1.0,
            m: 1.0,
            dt: 1e-3,
            t_max: 50.0,
            snapshot_every: 1000,
            seed: 1,
            n_x: 400,
            domain_length: 20.0,
            n_theta: if model == Model::Hilbert { 256 } else { 128 },
            n_r: 46,
            r_min: 0.2,
            r_max: 2.5,
            blowup_factor: 1e6,
        }
    }

    /// Check the invariants every solver relies on.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let positive = [
            ("D", self.d),
            ("chi", self.chi),
            ("S", self.s),
            ("alpha", self.alpha),
            ("k_on", self.k_on),
            ("k_off", self.k_off),
            ("dt", self.dt),
            ("t_max", self.t_max),
            ("L", self.domain_length),
            ("R_min", self.r_min),
            ("R_max", self.r_max),
            ("blowup_factor", self.blowup_factor),
        ];
        for (key, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(ConfigError::Invalid(format!(
                    "{key} must be strictly positive and finite, got {v}"
                )));
            }
        }
        if !(self.m >= 0.0) || !self.m.is_finite() {
            return Err(ConfigError::Invalid(format!(
                "M must be nonnegative, got {}",
                self.m
            )));
        }
        if self.r_min >= self.r_max {
            return Err(ConfigError::Invalid(format!(
                "need R_min < R_max, got [{}, {}]",
                self.r_min, self.r_max
            )));
        }
        if self.n_x < 2 {
            return Err(ConfigError::Invalid("N_x must be at least 2".into()));
        }
        if self.n_theta < 3 {
            return Err(ConfigError::Invalid("N_theta must be at least 3".into()));
        }
        if self.n_r < 2 {
            return Err(ConfigError::Invalid("N_r must be at least 2".into()));
        }
        if self.model == Model::Hilbert && self.n_theta % 2 != 0 {
            return Err(ConfigError::Invalid(
                "the hilbert model needs an even N_theta".into(),
            ));
        }
        if self.snapshot_every == 0 {
            return Err(ConfigError::Invalid("snapshot_every must be positive".into()));
        }
        Ok(())
    }

    /// Apply a single `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        fn num(key: &str, value: &str) -> Result<f64, ConfigError> {
            value.parse::<f64>().map_err(|_| ConfigError::BadValue {
                key: key.into(),
                value: value.into(),
                reason: "expected a number".into(),
            })
        }
        fn int(key: &str, value: &str) -> Result<usize, ConfigError> {
            value.parse::<usize>().map_err(|_| ConfigError::BadValue {
                key: key.into(),
                value: value.into(),
                reason: "expected a nonnegative integer".into(),
            })
        }
        match key {
            "model" => self.model = Model::parse(value)?,
            "D" => self.d = num(key, value)?,
            "chi" => self.chi = num(key, value)?,
            "S" => self.s = num(key, value)?,
            "alpha" => self.alpha = num(key, value)?,
            "k_on" => self.k_on = num(key, value)?,
            "k_off" => self.k_off = num(key, value)?,
            "M" => self.m = num(key, value)?,
            "dt" => self.dt = num(key, value)?,
            "t_max" => self.t_max = num(key, value)?,
            "snapshot_every" => self.snapshot_every = int(key, value)?,
            "seed" => {
                self.seed = value.parse::<u64>().map_err(|_| ConfigError::BadValue {
                    key: key.into(),
                    value: value.into(),
                    reason: "expected an unsigned integer".into(),
                })?
            }
            "N_x" => self.n_x = int(key, value)?,
            "L" => self.domain_length = num(key, value)?,
            "N_theta" => self.n_theta = int(key, value)?,
            "N_r" => self.n_r = int(key, value)?,
            "R_min" => self.r_min = num(key, value)?,
            "R_max" => self.r_max = num(key, value)?,
            "blowup_factor" => self.blowup_factor = num(key, value)?,
            _ => {
                return Err(ConfigError::UnknownKey(key.into()));
            }
        }
        Ok(())
    }

    /// Parse the flat key/value format: one `key = value` per line, `#`
    /// comments, blank lines ignored. The `model` key is mandatory.
    pub fn from_str(text: &str) -> Result<SimConfig, ConfigError> {
        let mut model = None;
        let mut assignments = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                ConfigError::Invalid(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if key == "model" {
                model = Some(Model::parse(&value)?);
            }
            assignments.push((key, value));
        }
        let model = model.ok_or_else(|| ConfigError::Invalid("missing `model` key".into()))?;
        let mut cfg = SimConfig::defaults(model);
        for (key, value) in assignments {
            cfg.set(&key, &value)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<SimConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Invalid(format!("{}: {e}", path.display())))?;
        SimConfig::from_str(&text)
    }
}

#[derive(Debug)]
pub enum ConfigError {
    UnknownKey(String),
    BadValue {
        key: String,
        value: String,
        reason: String,
    },
    Invalid(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::UnknownKey(k) => write!(f, "unknown config key `{k}`"),
            ConfigError::BadValue { key, value, reason } => {
                write!(f, "bad value `{value}` for `{key}`: {reason}")
            }
            ConfigError::Invalid(msg) => write!(f, "invalid config: {msg}"),
        }
    }
}

impl std::error::Error for ConfigError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_key_value_text() {
        let cfg = SimConfig::from_str(
            "# polarisation run\nmodel = annulus-potential\nM = 10\nseed = 3\nN_theta = 64\n",
        )
        .unwrap();
        assert_eq!(cfg.model, Model::AnnulusPotential);
        assert_eq!(cfg.m, 10.0);
        assert_eq!(cfg.seed, 3);
        assert_eq!(cfg.n_theta, 64);
        assert_eq!(cfg.d, 1.0);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_numbers() {
        assert!(SimConfig::from_str("model = hilbert\nbogus = 1\n").is_err());
        assert!(SimConfig::from_str("model = hilbert\nM = abc\n").is_err());
        assert!(SimConfig::from_str("M = 1.0\n").is_err());
    }

    #[test]
    fn validation_catches_bad_geometry() {
        let mut cfg = SimConfig::defaults(Model::AnnulusTransversal);
        cfg.r_min = 3.0;
        assert!(cfg.validate().is_err());
        let mut cfg = SimConfig::defaults(Model::HalflineSimple);
        cfg.dt = 0.0;
        assert!(cfg.validate().is_err());
        let mut cfg = SimConfig::defaults(Model::Hilbert);
        cfg.n_theta = 255;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn model_names_round_trip() {
        for m in Model::ALL {
            assert_eq!(Model::parse(m.as_str()).unwrap(), m);
        }
    }
}
