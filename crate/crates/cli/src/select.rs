//! Turning `--type`, `--rank`, `--ranks` and `--param` into a sorted list of
//! root systems.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use localh::cluster::RootSystem;

use crate::error::CliError;

/// Parses `N` or `A..B` (inclusive). Negative values are rejected by the caller.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Usage(format!("expected an integer or a range A..B, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(CliError::Usage(format!("empty range `{s}`")));
            }
            Ok(a..=b)
        }
        None => {
            let v: i64 = s.trim().parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

fn to_usize(v: i64, what: &str) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("{what} must be nonnegative, got {v}")))
}

pub struct Selector<'a> {
    pub types: &'a [String],
    pub ranks: Option<RangeInclusive<i64>>,
    pub params: Option<RangeInclusive<i64>>,
}

impl Selector<'_> {
    fn rank_list(&self, family: &str) -> Result<Vec<usize>, CliError> {
        let r = self.ranks.clone().ok_or_else(|| {
            CliError::Usage(format!("type {family} needs --rank N or --ranks A..B"))
        })?;
        r.map(|v| to_usize(v, "rank")).collect()
    }

    fn param_list(&self) -> Result<Vec<usize>, CliError> {
        let r = self
            .params
            .clone()
            .ok_or_else(|| CliError::Usage("type I2 needs --param M or --param A..B".into()))?;
        r.map(|v| to_usize(v, "param")).collect()
    }

    /// All selected systems, validated, deduplicated and sorted by (type, rank).
    pub fn resolve(&self) -> Result<Vec<RootSystem>, CliError> {
        if self.types.is_empty() {
            return Err(CliError::Usage("no --type given".into()));
        }
        let mut out = BTreeSet::new();
        for raw in self.types {
            let t = raw.trim().to_ascii_uppercase();
            let mut push = |rs: RootSystem| -> Result<(), CliError> {
                out.insert(rs.validate()?);
                Ok(())
            };
            match t.as_str() {
                "A" => self
                    .rank_list("A")?
                    .into_iter()
                    .try_for_each(|n| push(RootSystem::A(n)))?,
                "B" => self
                    .rank_list("B")?
                    .into_iter()
                    .try_for_each(|n| push(RootSystem::B(n)))?,
                "D" => self
                    .rank_list("D")?
                    .into_iter()
                    .try_for_each(|n| push(RootSystem::D(n)))?,
                "I2" => self
                    .param_list()?
                    .into_iter()
                    .try_for_each(|m| push(RootSystem::I2(m)))?,
                "EXCEPTIONAL" | "ALL" => {
                    if t == "ALL" {
                        for n in self.rank_list("all")? {
                            push(RootSystem::A(n))?;
                            if n >= 2 {
                                push(RootSystem::B(n))?;
                                push(RootSystem::D(n))?;
                            }
                        }
                    }
                    match self.params {
                        Some(_) => self
                            .param_list()?
                            .into_iter()
                            .try_for_each(|m| push(RootSystem::I2(m)))?,
                        None => push(RootSystem::I2(6))?,
                    }
                    RootSystem::exceptional()
                        .into_iter()
                        .try_for_each(&mut push)?;
                }
                _ => push(raw.parse::<RootSystem>()?)?,
            }
        }
        Ok(out.into_iter().collect())
    }
}
