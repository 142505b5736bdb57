//! One module per subcommand, plus the input helpers they share.

pub mod audit;
pub mod classify;
pub mod ingest;
pub mod measures;
pub mod predict;
pub mod raven;
pub mod tables;

use anyhow::{bail, Context};
use confirm_core::contingency::LabelPolicy;
use confirm_core::ContingencyTable;

/// Parse `a,b,c,d` into a table.
pub(crate) fn parse_counts(s: &str) -> anyhow::Result<ContingencyTable> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        bail!("expected four comma-separated counts a,b,c,d, found {}", parts.len());
    }
    let mut cells = [0u64; 4];
    for (slot, part) in cells.iter_mut().zip(&parts) {
        *slot = part.parse().with_context(|| format!("invalid count {part:?}"))?;
    }
    Ok(ContingencyTable::new(cells[0], cells[1], cells[2], cells[3])?)
}

/// Build a label policy from CLI flag values; empty flags keep the
/// default 1/0 labels.
pub(crate) fn label_policy(truthy: &[String], falsy: &[String]) -> LabelPolicy {
    if truthy.is_empty() && falsy.is_empty() {
        return LabelPolicy::default();
    }
    let truthy = if truthy.is_empty() { &["1".to_string()][..] } else { truthy };
    let falsy = if falsy.is_empty() { &["0".to_string()][..] } else { falsy };
    LabelPolicy::new(truthy.iter().cloned(), falsy.iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_parsing() {
        let t = parse_counts("20, 180,8,792").unwrap();
        assert_eq!(t.cells(), [20, 180, 8, 792]);
        assert!(parse_counts("1,2,3").is_err());
        assert!(parse_counts("1,2,3,x").is_err());
        assert!(parse_counts("0,0,0,0").is_err());
        assert!(parse_counts("1,2,3,-4").is_err());
    }
}
