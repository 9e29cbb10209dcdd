use std::path::Path;

use skeinlab::diagrams::{borromean_fixture, hopf_fixture, unknot_fixture, ColoredLink, LinkFile, SurgeryPresentation};
use skeinlab::wrt::torus_presentation;

use crate::error::{CliError, Result};

/// Built-in diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Fixture {
    Borromean,
    Hopf,
    Unknot,
}

/// Where a link comes from.
#[derive(Clone, Debug)]
pub enum Source<'a> {
    File(&'a Path),
    Fixture(Fixture),
}

pub fn read_link_file(path: &Path) -> Result<LinkFile> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(LinkFile::parse(&text)?)
}

/// The link with its colors, overridden by `colors` when given.
pub fn load_colored(source: &Source<'_>, colors: Option<&[u32]>) -> Result<ColoredLink> {
    let link = match source {
        Source::File(path) => read_link_file(path)?.colored()?,
        Source::Fixture(f) => ColoredLink::plain(match f {
            Fixture::Borromean => borromean_fixture(),
            Fixture::Hopf => hopf_fixture(),
            Fixture::Unknot => unknot_fixture(0),
        }),
    };
    match colors {
        None => Ok(link),
        Some(c) => Ok(ColoredLink::new(link.link, c.to_vec())?),
    }
}

/// A surgery presentation. The Borromean fixture gives the 3-torus, with a
/// meridian colored `color`; the Hopf link gives the 3-sphere and the
/// unknot `S^1 x S^2`.
pub fn load_presentation(source: &Source<'_>, color: u32) -> Result<SurgeryPresentation> {
    match source {
        Source::File(path) => {
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(read_link_file(path)?.presentation(&name)?)
        }
        Source::Fixture(Fixture::Borromean) => Ok(torus_presentation(color)),
        Source::Fixture(Fixture::Hopf) => Ok(SurgeryPresentation::surgery_only("3-sphere", hopf_fixture())),
        Source::Fixture(Fixture::Unknot) => Ok(SurgeryPresentation::surgery_only("S1 x S2", unknot_fixture(0))),
    }
}
