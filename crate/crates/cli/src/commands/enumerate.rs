use abstractdd::algebra::{
    enumerate_tables, profile_counts, sample_tables, table_count, Filter, FiniteMagma,
    EXHAUSTIVE_SIZE_LIMIT,
};
use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::algebra_error;
use crate::report::{CliError, Report};

fn rows(m: &FiniteMagma) -> String {
    let n = m.size();
    m.table()
        .chunks(n)
        .map(|row| row.iter().map(|&e| m.label(e)).join(" "))
        .join(" / ")
}

pub fn run(
    size: usize,
    filter: &[String],
    examples: usize,
    sample: Option<usize>,
    seed: u64,
    r: &mut Report,
) -> Result<(), CliError> {
    let filters = filter
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Filter>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Parse)?;
    if size == 0 {
        return Err(CliError::Parse("--size must be at least 1".into()));
    }
    r.kv("SIZE", size);
    let counts = match sample {
        Some(count) => {
            r.kv("MODE", format!("sampled, {count} tables, seed {seed}"));
            r.kv("TABLES", count);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            profile_counts(sample_tables(size, count, &mut rng), &filters, examples)
        }
        None => {
            if size > EXHAUSTIVE_SIZE_LIMIT {
                return Err(CliError::Budget(format!(
                    "size {size} has {} tables; exhaustive enumeration stops at size {EXHAUSTIVE_SIZE_LIMIT}, use --sample",
                    table_count(size).map_or("too many".to_string(), |c| c.to_string())
                )));
            }
            r.kv("MODE", "exhaustive");
            r.kv("TABLES", table_count(size).expect("small size"));
            profile_counts(
                enumerate_tables(size).map_err(algebra_error)?,
                &filters,
                examples,
            )
        }
    };
    r.kv(
        "FILTERS",
        if filter.is_empty() {
            "none".to_string()
        } else {
            filter.join(",")
        },
    );
    r.kv("MATCHED", counts.values().map(|t| t.count).sum::<u64>());
    r.kv("PROFILES", counts.len());
    for (profile, tally) in &counts {
        r.kv(&format!("PROFILE {profile}"), tally.count);
        for m in &tally.examples {
            r.kv(&format!("EXAMPLE {}", m.name()), rows(m));
        }
    }
    Ok(())
}
