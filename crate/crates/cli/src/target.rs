use std::sync::Arc;

use arq_core::fixtures::GridFixture;
use arq_core::{parse_type, ARQuiver, CommClass, DynkinQuiver, Kind, ReducedWord, RootSystem};
use clap::Args;

use crate::Failure;

/// Selects a root system and either a quiver or a reduced word.
#[derive(Debug, Clone, Default, Args)]
pub struct TargetArgs {
    /// Cartan type, either a letter (`D`) used with --rank, or a full name (`D4`).
    #[arg(long = "type", id = "type", value_name = "TYPE")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Orientation as directed Dynkin edges, e.g. "3>2,2>1,2>4". Every edge must be listed.
    #[arg(long)]
    pub orient: Option<String>,
    /// A reduced word of letters 1..n separated by spaces or commas.
    #[arg(long)]
    pub word: Option<String>,
    /// A class given as TYPE:ORIENTATION or TYPE:WORD, e.g. D4:"3>2,2>1,2>4".
    #[arg(long, alias = "quiver", value_name = "SPEC")]
    pub class: Option<String>,
    /// Use the quiver of a built-in appendix fixture, e.g. e6-appendix.
    #[arg(long)]
    pub fixture: Option<String>,
}

pub enum Target {
    Quiver(DynkinQuiver),
    Word(ReducedWord),
}

impl Target {
    pub fn system(&self) -> &Arc<RootSystem> {
        match self {
            Target::Quiver(q) => q.system(),
            Target::Word(w) => w.system(),
        }
    }

    pub fn class(&self) -> CommClass {
        match self {
            Target::Quiver(q) => ARQuiver::build(q).class(),
            Target::Word(w) => CommClass::new(w.clone()),
        }
    }

    pub fn word(&self) -> ReducedWord {
        match self {
            Target::Quiver(q) => ARQuiver::build(q).class().word().clone(),
            Target::Word(w) => w.clone(),
        }
    }
}

impl TargetArgs {
    /// The root system named by --type and --rank, or by the class prefix.
    pub fn system(&self) -> Result<Arc<RootSystem>, Failure> {
        if let Some(spec) = &self.class {
            let (ty, _) = split_class(spec)?;
            return system_of(ty, None);
        }
        if let Some(name) = &self.fixture {
            let fx = GridFixture::load(name)?;
            return Ok(Arc::new(RootSystem::new(fx.kind, fx.rank)?));
        }
        let kind = self
            .ty
            .as_deref()
            .ok_or_else(|| Failure::usage("missing --type"))?;
        system_of(kind, self.rank)
    }

    pub fn resolve(&self) -> Result<Target, Failure> {
        if let Some(name) = &self.fixture {
            return Ok(Target::Quiver(GridFixture::load(name)?.quiver()?));
        }
        if let Some(spec) = &self.class {
            let (ty, rest) = split_class(spec)?;
            let sys = system_of(ty, None)?;
            return if rest.contains('>') || rest.contains('<') || sys.rank() == 1 && rest.trim().is_empty() {
                Ok(Target::Quiver(DynkinQuiver::parse(&sys, rest)?))
            } else {
                Ok(Target::Word(ReducedWord::parse(&sys, rest)?))
            };
        }
        let sys = self.system()?;
        if let Some(word) = &self.word {
            return Ok(Target::Word(ReducedWord::parse(&sys, word)?));
        }
        self.quiver_of(&sys).map(Target::Quiver)
    }

    /// The quiver given by --orient, --class or --fixture.
    pub fn quiver(&self) -> Result<DynkinQuiver, Failure> {
        match self.resolve()? {
            Target::Quiver(q) => Ok(q),
            Target::Word(_) => Err(Failure::usage("this command needs a quiver, not a word")),
        }
    }

    fn quiver_of(&self, sys: &Arc<RootSystem>) -> Result<DynkinQuiver, Failure> {
        match &self.orient {
            Some(o) => Ok(DynkinQuiver::parse(sys, o)?),
            None if sys.datum().edges().is_empty() => Ok(DynkinQuiver::parse(sys, "")?),
            None => Err(Failure::usage("missing --orient (orientations have no default)")),
        }
    }

    /// Every orientation with --all-orientations, otherwise the single selected quiver.
    pub fn quivers(&self, all: bool) -> Result<Vec<DynkinQuiver>, Failure> {
        if all {
            Ok(DynkinQuiver::all(&self.system()?))
        } else {
            Ok(vec![self.quiver()?])
        }
    }
}

fn split_class(spec: &str) -> Result<(&str, &str), Failure> {
    spec.split_once(':')
        .ok_or_else(|| Failure::usage(format!("class {spec:?} must look like TYPE:SPEC")))
}

fn system_of(kind: &str, rank: Option<usize>) -> Result<Arc<RootSystem>, Failure> {
    let (kind, rank) = match rank {
        Some(r) if kind.len() == 1 => (kind.parse::<Kind>()?, r),
        Some(r) => {
            let (k, n) = parse_type(kind)?;
            if n != r {
                return Err(Failure::usage(format!("--type {kind} conflicts with --rank {r}")));
            }
            (k, n)
        }
        None => parse_type(kind)?,
    };
    Ok(Arc::new(RootSystem::new(kind, rank)?))
}
