//! Exhaustive and sampled enumeration of small composition tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{
    check_associative_with, check_commutative_with, check_medial_with, find_units, AlgebraError,
    Element, FiniteMagma, WitnessOrder,
};

/// Largest carrier enumerated exhaustively; `3^9 = 19,683` tables.
pub const EXHAUSTIVE_SIZE_LIMIT: usize = 3;

/// Number of tables on a carrier of `size` elements, `size^(size^2)`.
pub fn table_count(size: usize) -> Option<u64> {
    (size as u64).checked_pow(u32::try_from(size * size).ok()?)
}

fn table_from_code(size: usize, mut code: u64, name: String) -> FiniteMagma {
    let cells = size * size;
    let mut table = vec![Element(0); cells];
    for cell in table.iter_mut().rev() {
        *cell = Element((code % size as u64) as usize);
        code /= size as u64;
    }
    FiniteMagma::from_fn(name, size, |a, b| table[a * size + b].0).expect("valid table")
}

/// All tables on `{0, .., size-1}`, ordered lexicographically by their
/// row-major cells. Named `t<size>-<code>`.
pub fn enumerate_tables(size: usize) -> Result<impl Iterator<Item = FiniteMagma>, AlgebraError> {
    if size == 0 || size > EXHAUSTIVE_SIZE_LIMIT {
        return Err(AlgebraError::EnumerationBudget {
            size,
            limit: EXHAUSTIVE_SIZE_LIMIT,
        });
    }
    let count = table_count(size).expect("small size");
    Ok((0..count).map(move |code| table_from_code(size, code, format!("t{size}-{code}"))))
}

/// `count` uniformly random tables of the given size.
pub fn sample_tables<'r, R: Rng>(
    size: usize,
    count: usize,
    rng: &'r mut R,
) -> impl Iterator<Item = FiniteMagma> + 'r {
    (0..count).map(move |i| {
        let cells: Vec<usize> = (0..size * size).map(|_| rng.gen_range(0..size)).collect();
        FiniteMagma::from_fn(format!("s{size}-{i}"), size, |a, b| cells[a * size + b])
            .expect("valid table")
    })
}

/// The four flags that drive the abstraction results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub commutative: bool,
    pub associative: bool,
    pub medial: bool,
    /// Has a two-sided unit.
    pub unit: bool,
}

impl Profile {
    /// Flags only, without witness selection.
    pub fn of(m: &FiniteMagma) -> Profile {
        let fast = WitnessOrder::Lexicographic;
        Profile {
            commutative: check_commutative_with(m, fast).holds,
            associative: check_associative_with(m, fast).holds,
            medial: check_medial_with(m, fast).holds,
            unit: find_units(m).two_sided.is_some(),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "commutative={} associative={} medial={} unit={}",
            yn(self.commutative),
            yn(self.associative),
            yn(self.medial),
            yn(self.unit)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    Medial,
    NonMedial,
    Associative,
    NonAssociative,
    Commutative,
    NonCommutative,
    HasUnit,
    NoUnit,
}

impl Filter {
    pub fn accepts(self, p: &Profile) -> bool {
        match self {
            Filter::Medial => p.medial,
            Filter::NonMedial => !p.medial,
            Filter::Associative => p.associative,
            Filter::NonAssociative => !p.associative,
            Filter::Commutative => p.commutative,
            Filter::NonCommutative => !p.commutative,
            Filter::HasUnit => p.unit,
            Filter::NoUnit => !p.unit,
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "medial" => Filter::Medial,
            "non-medial" => Filter::NonMedial,
            "associative" => Filter::Associative,
            "non-associative" => Filter::NonAssociative,
            "commutative" => Filter::Commutative,
            "non-commutative" => Filter::NonCommutative,
            "has-unit" => Filter::HasUnit,
            "no-unit" => Filter::NoUnit,
            other => return Err(format!("unknown filter `{other}`")),
        })
    }
}

/// How many tables fell into a profile, plus the first few of them.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub count: u64,
    pub examples: Vec<FiniteMagma>,
}

/// Groups the tables passing every filter by profile, keeping up to
/// `keep` exemplars per profile in encounter order.
pub fn profile_counts(
    tables: impl IntoIterator<Item = FiniteMagma>,
    filters: &[Filter],
    keep: usize,
) -> BTreeMap<Profile, Tally> {
    let mut out: BTreeMap<Profile, Tally> = BTreeMap::new();
    for m in tables {
        let p = Profile::of(&m);
        if !filters.iter().all(|f| f.accepts(&p)) {
            continue;
        }
        let tally = out.entry(p).or_default();
        tally.count += 1;
        if tally.examples.len() < keep {
            tally.examples.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    #[test]
    fn counts() {
        assert_eq!(table_count(1), Some(1));
        assert_eq!(table_count(2), Some(16));
        assert_eq!(table_count(3), Some(19_683));
        assert_eq!(table_count(4), Some(4_294_967_296));
        assert_eq!(enumerate_tables(2).unwrap().count(), 16);
        assert!(enumerate_tables(4).is_err());
        assert!(enumerate_tables(0).is_err());
    }

    #[test]
    fn size_one_has_one_table_with_every_flag() {
        let all: Vec<_> = enumerate_tables(1).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(
            Profile::of(&all[0]),
            Profile {
                commutative: true,
                associative: true,
                medial: true,
                unit: true
            }
        );
    }

    #[test]
    fn medial_non_associative_size_two_contains_flip2() {
        let flip2 = builtin("flip2").unwrap().into_finite().unwrap();
        let found: Vec<FiniteMagma> = enumerate_tables(2)
            .unwrap()
            .filter(|m| {
                let p = Profile::of(m);
                p.medial && !p.associative
            })
            .collect();
        assert!(found.iter().any(|m| m.table() == flip2.table()));
    }

    #[test]
    fn first_and_last_codes() {
        let all: Vec<_> = enumerate_tables(2).unwrap().collect();
        assert!(all[0].table().iter().all(|e| e.0 == 0));
        assert!(all[15].table().iter().all(|e| e.0 == 1));
        // code 1 sets only the last cell
        assert_eq!(
            all[1].table(),
            &[Element(0), Element(0), Element(0), Element(1)]
        );
    }

    #[test]
    fn filters_parse_and_apply() {
        let f: Filter = "non-commutative".parse().unwrap();
        assert_eq!(f, Filter::NonCommutative);
        assert!("bogus".parse::<Filter>().is_err());
        let tallies = profile_counts(
            enumerate_tables(2).unwrap(),
            &[Filter::Medial, Filter::HasUnit],
            1,
        );
        assert!(tallies.keys().all(|p| p.medial && p.unit));
        assert!(tallies.values().all(|t| t.examples.len() == 1));
    }
}
