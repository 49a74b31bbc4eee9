//! Key-grid selection: the default verification grid, the `--grid` string
//! format, and single-key parsing for `--key`.

use anyhow::{anyhow, bail, Result};
use reflekt_core::GroupKey;

/// Parses "r,p,n" into a key; divisibility is validated by the constructor.
pub fn parse_key(s: &str) -> Result<GroupKey> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("expected a key of the form r,p,n, got {s:?}");
    }
    let r: u32 = parts[0].parse().map_err(|_| anyhow!("bad r in {s:?}"))?;
    let p: u32 = parts[1].parse().map_err(|_| anyhow!("bad p in {s:?}"))?;
    let n: usize = parts[2].parse().map_err(|_| anyhow!("bad n in {s:?}"))?;
    GroupKey::new(r, p, n).map_err(|e| anyhow!("{e}"))
}

/// Parses a grid description "r<=R,p|r,n<=N" into the rectangle of keys it
/// denotes (every divisor p of every r up to R, every n up to N).
pub fn parse_grid(s: &str) -> Result<Vec<GroupKey>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 || parts[1] != "p|r" {
        bail!("expected a grid of the form \"r<=R,p|r,n<=N\", got {s:?}");
    }
    let bound = |part: &str, var: &str| -> Result<u32> {
        let rest = part
            .strip_prefix(var)
            .and_then(|t| t.strip_prefix("<="))
            .ok_or_else(|| anyhow!("expected {var}<=BOUND, got {part:?}"))?;
        // A zero bound is allowed and denotes the empty grid.
        rest.trim().parse().map_err(|_| anyhow!("bad bound in {part:?}"))
    };
    let r_max = bound(parts[0], "r")?;
    let n_max = bound(parts[2], "n")?;
    Ok(rectangle(r_max, n_max))
}

fn rectangle(r_max: u32, n_max: u32) -> Vec<GroupKey> {
    let mut keys = Vec::new();
    for r in 1..=r_max {
        for p in 1..=r {
            if r % p != 0 {
                continue;
            }
            for n in 1..=n_max as usize {
                keys.push(GroupKey::new(r, p, n).expect("divisors only"));
            }
        }
    }
    keys
}

/// The default verification grid: the full rectangle r <= 6, n <= 3 plus a
/// few larger named keys that exercise rank 4, degree 6, and r = 8.
pub fn default_grid() -> Vec<GroupKey> {
    let mut keys = rectangle(6, 3);
    for (r, p, n) in [(4, 2, 4), (2, 2, 4), (1, 1, 6), (8, 2, 3)] {
        keys.push(GroupKey::new(r, p, n).expect("static keys"));
    }
    keys
}

/// Canonical display used in reports and check names.
pub fn key_label(key: GroupKey) -> String {
    format!("G({},{},{})", key.r, key.p, key.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_rejects_bad_ones() {
        let key = parse_key("6,2,3").unwrap();
        assert_eq!((key.r, key.p, key.n), (6, 2, 3));
        assert!(parse_key("6,4,3").is_err()); // 4 does not divide 6
        assert!(parse_key("6,2").is_err());
        assert!(parse_key("a,b,c").is_err());
    }

    #[test]
    fn grid_strings() {
        let keys = parse_grid("r<=2,p|r,n<=2").unwrap();
        let labels: Vec<String> = keys.iter().map(|&k| key_label(k)).collect();
        assert_eq!(
            labels,
            ["G(1,1,1)", "G(1,1,2)", "G(2,1,1)", "G(2,1,2)", "G(2,2,1)", "G(2,2,2)"]
        );
        assert!(parse_grid("r<=2,n<=2").is_err());
        assert!(parse_grid("r<=x,p|r,n<=2").is_err());
        assert!(parse_grid("r<=0,p|r,n<=2").unwrap().is_empty());
    }

    #[test]
    fn default_grid_shape() {
        let keys = default_grid();
        assert_eq!(keys.len(), 14 * 3 + 4);
        assert!(keys.contains(&GroupKey::new(8, 2, 3).unwrap()));
    }
}
