use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A multiset of `k`-subsets ("blocks") of the point set `{0, …, v−1}` with a
/// target pair multiplicity `λ`.
///
/// Points are 0-based in the API and 1-based in the text format. Each block is
/// stored sorted and the block list is kept in lexicographic order, so two
/// designs with the same blocks compare equal regardless of input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    lambda: u64,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(v: usize, k: usize, lambda: u64, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 || k > v {
            return Err(Error::InvalidArgument(format!(
                "block size {k} must lie in 1..={v}"
            )));
        }
        let mut canonical = Vec::with_capacity(blocks.len());
        for (index, mut block) in blocks.into_iter().enumerate() {
            if block.len() != k {
                return Err(Error::MalformedBlock {
                    index,
                    reason: format!("has {} points, expected {k}", block.len()),
                });
            }
            if let Some(&p) = block.iter().find(|&&p| p >= v) {
                return Err(Error::MalformedBlock {
                    index,
                    reason: format!("point {} outside 1..={v}", p + 1),
                });
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedBlock {
                    index,
                    reason: "repeated point".into(),
                });
            }
            canonical.push(block);
        }
        canonical.sort();
        Ok(Design {
            v,
            k,
            lambda,
            blocks: canonical,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `b`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `r_D(u)`: number of blocks through each point.
    pub fn replication(&self) -> Vec<u64> {
        let mut r = vec![0; self.v];
        for block in &self.blocks {
            for &p in block {
                r[p] += 1;
            }
        }
        r
    }

    /// `r_D(uw)` for all ordered pairs, as a dense `v × v` table with a zero
    /// diagonal.
    pub fn pair_counts(&self) -> Vec<Vec<u64>> {
        let mut counts = vec![vec![0; self.v]; self.v];
        for block in &self.blocks {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    counts[a][b] += 1;
                    counts[b][a] += 1;
                }
            }
        }
        counts
    }

    /// Incidence matrix `X` (`v × b`, 0/1 entries).
    pub fn incidence(&self) -> Vec<Vec<u8>> {
        let mut x = vec![vec![0; self.blocks.len()]; self.v];
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                x[p][j] = 1;
            }
        }
        x
    }

    /// Parses the text format: a header line `v k lambda`, then one block per
    /// line as `k` space-separated 1-based points. Blank lines and lines whose
    /// first non-blank character is `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            reason: "missing header line `v k lambda`".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        let [v, k, lambda] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                reason: format!("header needs 3 integers, found {}", nums.len()),
            });
        };
        if k == 0 || k > v {
            return Err(Error::Parse {
                line: hline,
                reason: format!("block size {k} must lie in 1..={v}"),
            });
        }
        let (v, k) = (v as usize, k as usize);

        let mut blocks = Vec::new();
        for (line, body) in lines {
            let pts = parse_numbers(line, body)?;
            if pts.len() != k {
                return Err(Error::Parse {
                    line,
                    reason: format!("block has {} points, expected {k}", pts.len()),
                });
            }
            let mut block = Vec::with_capacity(k);
            for p in pts {
                if p == 0 || p as usize > v {
                    return Err(Error::Parse {
                        line,
                        reason: format!("point {p} outside 1..={v}"),
                    });
                }
                block.push(p as usize - 1);
            }
            let mut sorted = block.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse {
                    line,
                    reason: "repeated point in block".into(),
                });
            }
            blocks.push(block);
        }
        Design::new(v, k, lambda, blocks)
    }

    /// Renders the canonical text form; `parse(to_text())` reproduces `self`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn parse_numbers(line: usize, body: &str) -> Result<Vec<u64>> {
    body.split_whitespace()
        .map(|t| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line,
                reason: format!("`{t}` is not a nonnegative integer"),
            })
        })
        .collect()
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.v, self.k, self.lambda)?;
        for block in &self.blocks {
            let mut first = true;
            for p in block {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Design {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Design::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) const FANO: &str = "7 3 1\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";

    #[test]
    fn parse_fano() {
        let d = Design::parse(FANO).unwrap();
        assert_eq!((d.v(), d.k(), d.lambda(), d.len()), (7, 3, 1, 7));
        assert_eq!(d.replication(), vec![3; 7]);
        assert_eq!(d.to_text(), FANO);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# fano\n7 3 1\n\n# blocks\n3 2 1\n  7 6 1\n";
        let d = Design::parse(text).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 1, 2], vec![0, 5, 6]]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Design::parse("5 3 1\n1 2 3\n1 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                reason: "block has 2 points, expected 3".into()
            }
        );
        assert!(matches!(
            Design::parse("5 3 1\n1 2 9\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Design::parse("5 3 1\n1 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Design::parse("5 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(Design::parse(""), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(
            Design::parse("5 x 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn constructor_rejects_malformed_blocks() {
        assert!(matches!(
            Design::new(5, 3, 1, vec![vec![0, 1, 2], vec![0, 1]]),
            Err(Error::MalformedBlock { index: 1, .. })
        ));
        assert!(matches!(
            Design::new(5, 3, 1, vec![vec![0, 1, 5]]),
            Err(Error::MalformedBlock { index: 0, .. })
        ));
    }

    #[test]
    fn duplicate_blocks_are_kept() {
        let d = Design::new(4, 3, 2, vec![vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.pair_counts()[0][1], 2);
    }

    fn arb_design() -> impl Strategy<Value = Design> {
        (4usize..10).prop_flat_map(|v| {
            (2usize..v).prop_flat_map(move |k| {
                let block = proptest::sample::subsequence((0..v).collect::<Vec<_>>(), k)
                    .prop_shuffle();
                (proptest::collection::vec(block, 0..12), 1u64..4)
                    .prop_map(move |(blocks, l)| Design::new(v, k, l, blocks).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(d in arb_design()) {
            let text = d.to_text();
            let back = Design::parse(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
