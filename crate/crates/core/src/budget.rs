use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// A soft wall-clock deadline checked between expensive steps.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn within(d: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + d) }
    }

    pub fn is_limited(&self) -> bool {
        self.deadline.is_some()
    }

    pub fn check(&self, what: &str) -> Result<()> {
        match self.deadline {
            Some(t) if Instant::now() > t => Err(Error::BudgetExceeded(what.to_string())),
            _ => Ok(()),
        }
    }
}
