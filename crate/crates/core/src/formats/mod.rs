//! Readers and writers for every external file format.
//!
//! | Format | Reader | Writer |
//! |--------|--------|--------|
//! | PubTator-style corpus | [`parse_pubtator`] | [`write_pubtator`] |
//! | Repository triples | [`parse_repository`] | |
//! | Corpus profile (JSON) | [`parse_profile`] | [`write_profile`] |
//! | Lexicon (TSV) | [`parse_lexicon`] | |
//! | Instance stream (JSON lines) | [`parse_instances`] | [`write_instances`] |
//! | Gold / prediction tuples (TSV) | [`parse_tuples`] | [`write_tuples`] |

mod instances;
mod lexicon;
mod profile;
mod pubtator;
mod repository;
mod tuples;

pub use instances::{parse_instances, write_instances};
pub use lexicon::parse_lexicon;
pub use profile::{parse_profile, write_profile};
pub use pubtator::{parse_pubtator, write_pubtator, UNRESOLVED_MARKER};
pub use repository::{parse_repository, RepositoryRecord};
pub use tuples::{parse_tuples, write_tuples};

/// Iterates `(1-based line number, line)` with a trailing `\r` removed.
pub(crate) fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
}
