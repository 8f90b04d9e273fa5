use thiserror::Error;

/// Errors raised by the geometric constructions and bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("{what} out of domain: {detail}")]
    Domain { what: &'static str, detail: String },

    #[error("no right-angled pentagon with adjacent sides {0} and {1} (sinh product below 1)")]
    NoSuchPentagon(f64, f64),

    #[error("construction failed to close (residual {residual:e})")]
    Inconsistent { residual: f64 },

    #[error("mesh graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("points are not on the hyperboloid sheet (pairing {pairing})")]
    OffSheet { pairing: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl GeomError {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        GeomError::Domain {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
