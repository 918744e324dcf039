//! Partitions, Young tableaux over the alphabet `{1, ..., n}`, and the
//! enumerations used by the bitableau constructions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the proper alphabet `{1, ..., n}`.
pub type Letter = u8;

/// A weakly decreasing sequence of positive parts. The empty partition is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of the first row, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The conjugate partition: its `s`-th part counts the rows of length at least `s`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first_part())
            .map(|s| self.parts.iter().filter(|&&p| p >= s).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `d`, largest first in lexicographic order.
    pub fn all_of(d: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(d, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses space- or comma-separated parts, e.g. `"2 2"` or `"3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A filling of a Young diagram by letters. Row `k` has `shape.parts()[k]` entries.
///
/// The alphabet bound `n` is not stored; enumerations take it as an argument.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Builds a tableau from its rows. Rows must be non-empty with weakly
    /// decreasing lengths and entries must be at least 1.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens.clone())?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Parse("tableau entries start at 1".into()));
        }
        Ok(Self { rows })
    }

    /// A single column with the given entries, top to bottom.
    pub fn column(entries: &[Letter]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| vec![x]).collect())
    }

    pub fn row(entries: &[Letter]) -> Result<Self> {
        if entries.is_empty() {
            return Ok(Self::default());
        }
        Self::new(vec![entries.to_vec()])
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest entry, 0 when empty.
    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Checks that every entry lies in `{1, ..., n}`.
    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        match self.rows.iter().flatten().find(|&&x| x as usize > n) {
            Some(&x) => Err(Error::IndexOutOfRange { index: x as usize, n }),
            None => Ok(()),
        }
    }

    /// Column `c` read top to bottom.
    pub fn column_entries(&self, c: usize) -> Vec<Letter> {
        self.rows
            .iter()
            .take_while(|r| r.len() > c)
            .map(|r| r[c])
            .collect()
    }

    /// The tableau whose rows are the columns of `self`.
    pub fn conjugate(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        Tableau {
            rows: (0..width).map(|c| self.column_entries(c)).collect(),
        }
    }

    /// Rows strictly increasing, columns weakly increasing.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            let (upper, lower) = (&pair[0], &pair[1]);
            lower.iter().zip(upper).all(|(lo, up)| up <= lo)
        });
        rows_ok && cols_ok
    }

    /// The conjugate is standard: columns strictly increasing, rows weakly increasing.
    pub fn is_costandard(&self) -> bool {
        self.conjugate().is_standard()
    }

    /// Every filling obtained by permuting each column independently,
    /// counted with multiplicity: exactly `Π_c (column length)!` tableaux.
    pub fn column_permutations(&self) -> Vec<Tableau> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = vec![self.clone()];
        for c in 0..width {
            let col = self.column_entries(c);
            let perms = crate::perm::permutations(col.len());
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for t in &out {
                for (perm, _) in &perms {
                    let mut u = t.clone();
                    for (r, &src) in perm.iter().enumerate() {
                        u.rows[r][c] = col[src];
                    }
                    next.push(u);
                }
            }
            out = next;
        }
        out
    }

    fn fillings(shape: &Partition, n: usize, row_ok: impl Fn(&[Letter]) -> bool) -> Vec<Tableau> {
        // Rows are chosen independently; the lexicographic order of the
        // row-major reading word is the order of the nested loops.
        let mut acc: Vec<Vec<Vec<Letter>>> = vec![Vec::new()];
        for &len in shape.parts() {
            let words: Vec<Vec<Letter>> = all_words(len, n).into_iter().filter(|w| row_ok(w)).collect();
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    words.iter().map(move |w| {
                        let mut rows = prefix.clone();
                        rows.push(w.clone());
                        rows
                    })
                })
                .collect();
        }
        acc.into_iter().map(|rows| Tableau { rows }).collect()
    }

    /// All fillings of `shape` by `{1, ..., n}`, in reading-word order.
    pub fn enumerate_all(shape: &Partition, n: usize) -> Vec<Tableau> {
        Self::fillings(shape, n, |_| true)
    }

    /// All standard tableaux of `shape` with entries in `{1, ..., n}`,
    /// ordered lexicographically by reading word.
    pub fn enumerate_standard(shape: &Partition, n: usize) -> Vec<Tableau> {
        Self::fillings(shape, n, |w| w.windows(2).all(|p| p[0] < p[1]))
            .into_iter()
            .filter(Tableau::is_standard)
            .collect()
    }

    /// All costandard tableaux of `shape` with entries in `{1, ..., n}`.
    pub fn enumerate_costandard(shape: &Partition, n: usize) -> Vec<Tableau> {
        Self::fillings(shape, n, |w| w.windows(2).all(|p| p[0] <= p[1]))
            .into_iter()
            .filter(Tableau::is_costandard)
            .collect()
    }

    /// All tableaux of `shape` whose rows are strictly increasing; columns are
    /// unconstrained. Fails when the first row is longer than the alphabet.
    pub fn enumerate_row_increasing(shape: &Partition, n: usize) -> Result<Vec<Tableau>> {
        if shape.first_part() > n {
            return Err(Error::RowTooLong { row: shape.first_part(), n });
        }
        Ok(Self::fillings(shape, n, |w| w.windows(2).all(|p| p[0] < p[1])))
    }
}

/// All words of length `len` over `{1, ..., n}` in lexicographic order.
pub fn all_words(len: usize, n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n as Letter).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for Tableau {
    /// Rows separated by `" / "`, entries by single spaces: `1 2 / 2 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|row| {
                let entries = row
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<Letter>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if entries.is_empty() {
                    return Err(Error::Parse(format!("empty row in tableau {s:?}")));
                }
                Ok(entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}
