//! Finite groups stored as dense Cayley tables.
//!
//! Constructors cover the cyclic, dihedral and dicyclic families; arbitrary
//! groups come in through [`FiniteGroup::from_cayley_table`] or the text
//! format read by [`parse_cayley_text`].

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::GroupError;

/// Canonical element id, a row/column index of the owning Cayley table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub usize);

impl GroupElement {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Cyclic group `C_n` on residues mod `n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect::<Vec<Vec<_>>>();
        let labels = (0..n).map(|i| power_label("a", i)).collect();
        Self::from_table_with_labels(&table, Some(labels))
    }

    /// Dihedral group of order `2n`, `<a, b | a^n = b^2 = 1, bab = a^-1>`.
    ///
    /// `a^i b^j` is stored at index `j*n + i`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let order = 2 * n;
        let mut table = vec![vec![0; order]; order];
        for (x, row) in table.iter_mut().enumerate() {
            let (i, j) = (x % n, x / n);
            for (y, cell) in row.iter_mut().enumerate() {
                let (k, l) = (y % n, y / n);
                // b a^k = a^-k b
                let exp = if j == 0 { i + k } else { i + n - k };
                *cell = ((j + l) % 2) * n + exp % n;
            }
        }
        let labels = (0..order).map(|x| ab_label(x % n, x / n)).collect();
        Self::from_table_with_labels(&table, Some(labels))
    }

    /// Dicyclic group of order `4m`, `<a, b | a^2m = 1, b^2 = a^m, bab^-1 = a^-1>`.
    ///
    /// `a^i b^j` is stored at index `j*2m + i`.
    pub fn dicyclic(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let n = 2 * m;
        let order = 2 * n;
        let mut table = vec![vec![0; order]; order];
        for (x, row) in table.iter_mut().enumerate() {
            let (i, j) = (x % n, x / n);
            for (y, cell) in row.iter_mut().enumerate() {
                let (k, l) = (y % n, y / n);
                *cell = match (j, l) {
                    (0, _) => l * n + (i + k) % n,
                    (_, 0) => n + (i + n - k) % n,
                    _ => (i + n - k + m) % n,
                };
            }
        }
        let labels = (0..order).map(|x| ab_label(x % n, x / n)).collect();
        Self::from_table_with_labels(&table, Some(labels))
    }

    /// Validates a raw table against the group axioms.
    ///
    /// The identity is detected rather than assumed to sit at index 0.
    pub fn from_cayley_table(raw: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_table_with_labels(raw, None)
    }

    pub fn from_table_with_labels(
        raw: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = raw.len();
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        for (row, entries) in raw.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NonSquare { row, len: entries.len(), order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
            }
        }
        check_latin(raw)?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| raw[e][x] == x && raw[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| raw[x][y] == identity && raw[y][x] == identity)
                    .ok_or(GroupError::MissingInverse { element: x })
            })
            .collect::<Result<Vec<_>, _>>()?;

        for x in 0..order {
            for y in 0..order {
                let xy = raw[x][y];
                for z in 0..order {
                    if raw[xy][z] != raw[x][raw[y][z]] {
                        return Err(GroupError::NotAssociative { x, y, z });
                    }
                }
            }
        }

        let labels = labels.unwrap_or_else(|| (0..order).map(|x| x.to_string()).collect());
        assert_eq!(labels.len(), order, "one label per element");
        Ok(Self { order, cayley: raw.concat(), identity, inverse, labels })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    #[inline]
    pub fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        GroupElement(self.cayley[x.0 * self.order + y.0])
    }

    #[inline]
    pub fn inv(&self, x: GroupElement) -> GroupElement {
        GroupElement(self.inverse[x.0])
    }

    pub fn element(&self, index: usize) -> Result<GroupElement, GroupError> {
        if index < self.order {
            Ok(GroupElement(index))
        } else {
            Err(GroupError::BadElement { index, order: self.order })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order).map(GroupElement)
    }

    pub fn label(&self, x: GroupElement) -> &str {
        &self.labels[x.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row(&self, x: GroupElement) -> &[usize] {
        &self.cayley[x.0 * self.order..(x.0 + 1) * self.order]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// `x^k`, with `k = 0` giving the identity.
    pub fn pow(&self, x: GroupElement, k: usize) -> GroupElement {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, x))
    }

    /// Smallest `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: GroupElement) -> usize {
        let mut k = 1;
        let mut power = x;
        while power != self.identity() {
            power = self.mul(power, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.cayley[x * self.order + y] == self.cayley[y * self.order + x]))
    }

    /// Serializes into the text format accepted by [`parse_cayley_text`].
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.cayley.chunks(self.order) {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("{i} {label}\n"));
        }
        out
    }
}

fn check_latin(raw: &[Vec<usize>]) -> Result<(), GroupError> {
    let order = raw.len();
    let mut seen = vec![usize::MAX; order];
    for (r, row) in raw.iter().enumerate() {
        for &value in row {
            if seen[value] == r {
                return Err(GroupError::NotLatinSquare { line: "row", index: r, value });
            }
            seen[value] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..order {
        for row in raw {
            let value = row[c];
            if seen[value] == c {
                return Err(GroupError::NotLatinSquare { line: "column", index: c, value });
            }
            seen[value] = c;
        }
    }
    Ok(())
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn ab_label(i: usize, j: usize) -> String {
    match (i, j) {
        (0, 0) => "e".to_string(),
        (_, 0) => power_label("a", i),
        (0, _) => "b".to_string(),
        _ => format!("{} b", power_label("a", i)),
    }
}

/// Parses the Cayley text format: the order on the first line, then one
/// whitespace-separated row of 0-based indices per line, then optional
/// `index label` lines. Blank lines are ignored.
pub fn parse_cayley_text(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or(GroupError::Parse { line: 1, message: "empty input".into() })?;
    let order: usize = header
        .parse()
        .map_err(|_| GroupError::Parse { line: first, message: format!("expected group order, found `{header}`") })?;
    if order == 0 {
        return Err(GroupError::Parse { line: first, message: "group order must be positive".into() });
    }

    let mut table = Vec::with_capacity(order);
    for r in 0..order {
        let (line, content) = lines.next().ok_or(GroupError::Parse {
            line: first + r + 1,
            message: format!("expected {order} table rows, found {r}"),
        })?;
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| GroupError::Parse { line, message: format!("`{tok}` is not a non-negative integer") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(GroupError::Parse { line, message: format!("expected {order} entries, found {}", row.len()) });
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= order) {
            return Err(GroupError::Parse { line, message: format!("entry {bad} out of range for order {order}") });
        }
        table.push(row);
    }

    let mut labels: Vec<Option<String>> = vec![None; order];
    for (line, content) in lines {
        let (idx, label) = content.split_once(char::is_whitespace).ok_or(GroupError::Parse {
            line,
            message: "expected `index label`".into(),
        })?;
        let idx: usize = idx
            .parse()
            .map_err(|_| GroupError::Parse { line, message: format!("`{idx}` is not an element index") })?;
        if idx >= order {
            return Err(GroupError::Parse { line, message: format!("label index {idx} out of range") });
        }
        if labels[idx].is_some() {
            return Err(GroupError::Parse { line, message: format!("duplicate label for element {idx}") });
        }
        labels[idx] = Some(label.trim().to_string());
    }
    let labels = labels.into_iter().enumerate().map(|(i, l)| l.unwrap_or_else(|| i.to_string())).collect();
    FiniteGroup::from_table_with_labels(&table, Some(labels))
}

pub fn read_cayley_file(path: &Path) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_cayley_text(&text)
}

/// Command-line style group descriptor, e.g. `dihedral:5` or `cayley:g.txt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    CayleyFile(PathBuf),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Dicyclic(m) => FiniteGroup::dicyclic(*m),
            GroupSpec::CayleyFile(path) => read_cayley_file(path),
        }
    }

    /// Order implied by the descriptor, when known without reading a file.
    pub fn nominal_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Dicyclic(m) => m.checked_mul(4),
            GroupSpec::CayleyFile(_) => None,
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadSpec(s.to_string());
        let (family, param) = s.split_once(':').ok_or_else(bad)?;
        if family == "cayley" {
            if param.is_empty() {
                return Err(bad());
            }
            return Ok(GroupSpec::CayleyFile(PathBuf::from(param)));
        }
        let n: usize = param.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match family {
            "cyclic" => Ok(GroupSpec::Cyclic(n)),
            "dihedral" => Ok(GroupSpec::Dihedral(n)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            GroupSpec::CayleyFile(p) => write!(f, "cayley:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(g: &FiniteGroup, x: GroupElement) -> usize {
        (1..=g.order()).find(|&k| g.pow(x, k) == g.identity()).unwrap()
    }

    fn count_of_order(g: &FiniteGroup, k: usize) -> usize {
        g.elements().filter(|&x| brute_order(g, x) == k).count()
    }

    #[test]
    fn cyclic_examples() {
        let trivial = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(trivial.order(), 1);
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.element_order(GroupElement(2)), 3);
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.inv(GroupElement(1)), GroupElement(3));
        assert_eq!(FiniteGroup::cyclic(0), Err(GroupError::ZeroOrder));
    }

    #[test]
    fn dihedral_examples() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        assert!(!d6.is_abelian());
        let b = GroupElement(3);
        assert_eq!(d6.label(b), "b");
        assert_eq!(brute_order(&d6, b), 2);

        let d2 = FiniteGroup::dihedral(1).unwrap();
        assert_eq!(d2.order(), 2);
        assert!(d2.is_abelian());

        let d10 = FiniteGroup::dihedral(5).unwrap();
        assert_eq!(count_of_order(&d10, 2), 5);
        assert_eq!(count_of_order(&d10, 1), 1);
        assert_eq!(FiniteGroup::dihedral(0), Err(GroupError::ZeroOrder));
    }

    #[test]
    fn dihedral_relations_hold() {
        for n in 1..=12 {
            let g = FiniteGroup::dihedral(n).unwrap();
            let a = GroupElement(1 % n);
            let b = GroupElement(n);
            assert_eq!(g.pow(a, n), g.identity());
            assert_eq!(g.mul(b, b), g.identity());
            assert_eq!(g.mul(g.mul(b, a), b), g.inv(a));
        }
    }

    #[test]
    fn dicyclic_examples() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(count_of_order(&q8, 2), 1);
        let b = GroupElement(4);
        assert_eq!(q8.mul(b, b), GroupElement(2));
        assert_eq!(q8.element_order(b), 4);

        let q4 = FiniteGroup::dicyclic(1).unwrap();
        assert_eq!(q4.order(), 4);
        assert_eq!(count_of_order(&q4, 4), 2, "C_4 has two generators");

        let q12 = FiniteGroup::dicyclic(3).unwrap();
        assert_eq!(q12.element_order(GroupElement(1)), 6);
    }

    #[test]
    fn dicyclic_relations_hold() {
        for m in 1..=10 {
            let g = FiniteGroup::dicyclic(m).unwrap();
            let a = GroupElement(1);
            let b = GroupElement(2 * m);
            assert_eq!(g.pow(a, 2 * m), g.identity());
            assert_eq!(g.mul(b, b), g.pow(a, m));
            assert_eq!(g.mul(g.mul(b, a), g.inv(b)), g.inv(a));
        }
    }

    #[test]
    fn element_order_examples() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d6.element_order(d6.identity()), 1);
        assert_eq!(d6.element_order(GroupElement(1)), 3);
    }

    #[test]
    fn lagrange_for_every_element() {
        let groups = (1..=9)
            .flat_map(|n| [FiniteGroup::cyclic(n), FiniteGroup::dihedral(n), FiniteGroup::dicyclic(n)])
            .map(Result::unwrap);
        for g in groups {
            for x in g.elements() {
                assert_eq!(g.order() % g.element_order(x), 0);
            }
        }
    }

    #[test]
    fn cayley_table_validation() {
        assert_eq!(FiniteGroup::from_cayley_table(&[vec![0]]).unwrap().order(), 1);
        assert_eq!(FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap().order(), 2);
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::NotLatinSquare { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1]]),
            Err(GroupError::NonSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::EntryOutOfRange { value: 2, .. })
        ));
        // x*y = -x-y mod 3 is a latin square without identity
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]),
            Err(GroupError::NoIdentity)
        );
        // loop with identity 0 that is not associative (order 5 latin square)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_cayley_table(&loop5), Err(GroupError::NotAssociative { .. })));
    }

    #[test]
    fn missing_inverse_is_reported() {
        // identity 0, latin, but 1*2 = 0 while 2*1 != 0
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let err = FiniteGroup::from_cayley_table(&table);
        assert!(err.is_err());
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 0, 4, 3],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 0, 3, 1, 2],
        ];
        assert!(matches!(FiniteGroup::from_cayley_table(&table), Err(GroupError::MissingInverse { .. })));
    }

    #[test]
    fn identity_detected_off_index_zero() {
        // C_3 relabelled so the identity is element 2
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_cayley_table(&table).unwrap();
        assert_eq!(g.identity(), GroupElement(2));
        assert_eq!(g.inv(GroupElement(0)), GroupElement(1));
    }

    #[test]
    fn text_format_roundtrip_and_errors() {
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        let parsed = parse_cayley_text(&q8.to_cayley_text()).unwrap();
        assert_eq!(parsed, q8);

        let text = "  2 \n0   1\n\n 1 0  \n0 e\n1 a b\n";
        let g = parse_cayley_text(text).unwrap();
        assert_eq!(g.label(GroupElement(1)), "a b");

        let err = parse_cayley_text("2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, GroupError::Parse { line: 3, message: "`x` is not a non-negative integer".into() });
        let err = parse_cayley_text("3\n0 1 2\n1 2 0\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 4, .. }));
        let err = parse_cayley_text("2\n0 1\n1 0\n7 seven\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 4, .. }));
        let err = parse_cayley_text("two\n").unwrap_err();
        assert!(matches!(err, GroupError::Parse { line: 1, .. }));
    }

    #[test]
    fn group_spec_grammar() {
        assert_eq!("dihedral:3".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(3));
        assert_eq!("cyclic:12".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(12));
        assert_eq!("dicyclic:2".parse::<GroupSpec>().unwrap().nominal_order(), Some(8));
        assert_eq!(
            "cayley:groups/a4.txt".parse::<GroupSpec>().unwrap(),
            GroupSpec::CayleyFile(PathBuf::from("groups/a4.txt"))
        );
        for bad in ["dihedral", "dihedral:0", "dihedral:x", "klein:4", "cayley:"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        assert_eq!(GroupSpec::Dicyclic(9).to_string(), "dicyclic:9");
    }
}
