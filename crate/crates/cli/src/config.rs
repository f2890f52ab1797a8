use std::path::{Path, PathBuf};

use sunseq_core::cert::MIN_HORIZON;
use sunseq_core::sequence::{builtin, generate, TermCache};
use sunseq_core::{SequenceDef, TermStore};

use crate::definition::load_custom_definition;
use crate::error::CliError;
use crate::render::Format;

pub const MAX_DIGITS: u32 = 1000;

/// Which sequence a run works on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSource {
    Builtin(String),
    File(PathBuf),
}

impl SequenceSource {
    pub fn load(&self) -> Result<SequenceDef, CliError> {
        match self {
            SequenceSource::Builtin(name) => builtin::by_name(name)
                .ok_or_else(|| CliError::Usage(format!("unknown builtin sequence `{name}`"))),
            SequenceSource::File(path) => Ok(load_custom_definition(path)?),
        }
    }
}

/// Options shared by every subcommand, validated once.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub def: SequenceDef,
    /// Largest index the default ranges reach.
    pub horizon: u64,
    pub digits: u32,
    pub format: Format,
    pub cache_root: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(
        source: &SequenceSource,
        horizon: u64,
        digits: u32,
        format: Format,
        cache_root: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        if horizon < MIN_HORIZON {
            return Err(CliError::Usage(format!(
                "--horizon must be at least {MIN_HORIZON}, got {horizon}"
            )));
        }
        if !(1..=MAX_DIGITS).contains(&digits) {
            return Err(CliError::Usage(format!(
                "--digits must lie in 1..={MAX_DIGITS}, got {digits}"
            )));
        }
        Ok(RunConfig {
            def: source.load()?,
            horizon,
            digits,
            format,
            cache_root,
        })
    }

    pub fn is_builtin(&self, name: &str) -> bool {
        builtin::by_name(name).as_ref() == Some(&self.def)
    }

    /// Terms `0..=upto`, through the cache when one is configured.
    pub fn terms(&self, upto: u64) -> Result<TermStore, CliError> {
        Ok(match &self.cache_root {
            Some(root) => cache(root).get_or_generate(&self.def, upto)?,
            None => generate(&self.def, upto)?,
        })
    }

    pub fn cache(&self) -> Option<TermCache> {
        self.cache_root.as_deref().map(cache)
    }
}

fn cache(root: &Path) -> TermCache {
    TermCache::new(root)
}
