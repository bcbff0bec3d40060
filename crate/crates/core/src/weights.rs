//! Total and differential weights on a Dowker complex and the two
//! reconstruction procedures that recover a relation from them.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{descending, dowker, face_poset, y_sigma, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::labels::LabelSet;
use crate::relation::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Total,
    Differential,
    Unchecked,
}

impl WeightKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WeightKind::Total => "total",
            WeightKind::Differential => "differential",
            WeightKind::Unchecked => "unchecked",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "total" => Some(WeightKind::Total),
            "differential" => Some(WeightKind::Differential),
            "unchecked" => Some(WeightKind::Unchecked),
            _ => None,
        }
    }
}

/// Nonnegative integers on the simplices of a complex plus the empty simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    complex: SimplicialComplex,
    values: BTreeMap<Simplex, u64>,
    kind: WeightKind,
}

impl WeightFunction {
    /// Missing simplices default to zero. Keys outside the complex are
    /// rejected, and a `Total` weight must be order-reversing.
    pub fn new(
        complex: SimplicialComplex,
        values: BTreeMap<Simplex, u64>,
        kind: WeightKind,
    ) -> Result<Self> {
        if let Some(bad) = values
            .keys()
            .find(|s| !s.is_empty() && !complex.contains(s))
        {
            return Err(Error::UnknownSimplex(
                bad.display(complex.universe()).to_string(),
            ));
        }
        let mut full: BTreeMap<Simplex, u64> = std::iter::once(Simplex::empty())
            .chain(complex.simplices().iter().cloned())
            .map(|s| (s, 0))
            .collect();
        full.extend(values);
        let w = Self {
            complex,
            values: full,
            kind,
        };
        if kind == WeightKind::Total && !w.is_filtration() {
            return Err(Error::InvalidWeights(
                "a total weight must be order-reversing".into(),
            ));
        }
        Ok(w)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn get(&self, s: &Simplex) -> u64 {
        self.values.get(s).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &BTreeMap<Simplex, u64> {
        &self.values
    }

    pub fn sum(&self) -> u64 {
        self.values.values().sum()
    }

    /// Entries in decreasing cardinality, then lexicographic order; the
    /// empty simplex comes last.
    pub fn descending(&self) -> Vec<(&Simplex, u64)> {
        let mut out: Vec<(&Simplex, u64)> = self.values.iter().map(|(s, &v)| (s, v)).collect();
        out.sort_by_key(|(s, _)| descending(s));
        out
    }

    /// Order-reversing check over the Hasse covers, plus the empty simplex
    /// against every vertex.
    pub fn is_filtration(&self) -> bool {
        let poset = face_poset(&self.complex);
        let covers_ok = poset
            .covers()
            .iter()
            .all(|&(lo, hi)| self.get(poset.element(lo)) >= self.get(poset.element(hi)));
        let empty = self.get(&Simplex::empty());
        covers_ok
            && self
                .complex
                .vertices()
                .iter()
                .all(|&v| empty >= self.get(&Simplex::vertex(v)))
    }

    pub fn with_kind(mut self, kind: WeightKind) -> Self {
        self.kind = kind;
        self
    }
}

/// `t(σ) = |Y_σ|`, with `t(∅) = |Y|`.
pub fn total_weight(r: &Relation) -> WeightFunction {
    let k = dowker(r);
    let values = std::iter::once(Simplex::empty())
        .chain(k.simplices().iter().cloned())
        .map(|s| {
            let n = y_sigma(r, &s)
                .expect("simplex of the relation's own complex")
                .len() as u64;
            (s, n)
        })
        .collect();
    WeightFunction {
        complex: k,
        values,
        kind: WeightKind::Total,
    }
}

/// `d(σ)` counts the columns whose support is exactly `σ`; `d(∅)` counts the
/// all-zero columns.
pub fn differential_weight(r: &Relation) -> WeightFunction {
    let k = dowker(r);
    let mut values: BTreeMap<Simplex, u64> = std::iter::once(Simplex::empty())
        .chain(k.simplices().iter().cloned())
        .map(|s| (s, 0))
        .collect();
    for y in 0..r.ny() {
        *values
            .get_mut(&Simplex::new(r.column_support(y)))
            .expect("column supports are simplices") += 1;
    }
    WeightFunction {
        complex: k,
        values,
        kind: WeightKind::Differential,
    }
}

fn column_labels(n: usize) -> LabelSet {
    LabelSet::numbered("", n)
}

fn relation_from_columns(rows: &LabelSet, columns: &[Simplex]) -> Relation {
    let matrix = (0..rows.len())
        .map(|x| columns.iter().map(|c| c.contains(x)).collect())
        .collect();
    Relation::new(rows.clone(), column_labels(columns.len()), matrix)
        .expect("dimensions agree by construction")
}

/// Emits `d(σ)` indicator columns for each simplex, in decreasing
/// cardinality then lexicographic order, with the `d(∅)` zero columns last.
///
/// Rows are the complex's full label universe, so rows that carry no
/// simplex come back as zero rows.
pub fn reconstruct_from_differential(d: &WeightFunction) -> Relation {
    let columns: Vec<Simplex> = d
        .descending()
        .into_iter()
        .flat_map(|(s, n)| std::iter::repeat_n(s.clone(), n as usize))
        .collect();
    relation_from_columns(d.complex().universe(), &columns)
}

/// Diagnostic for a filtration that cannot be the total weight of any
/// relation: the first simplex driven negative, and the intermediate
/// weights at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotRealizable {
    pub simplex: Simplex,
    pub label: String,
    pub value: i64,
    /// The simplex being peeled when the value went negative.
    pub peeled: Option<String>,
    /// Intermediate weights keyed by canonical simplex string.
    pub snapshot: Vec<(String, i64)>,
}

impl fmt::Display for NotRealizable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a total weight: peeling produces {} at [{}]",
            self.value, self.label
        )?;
        if let Some(p) = &self.peeled {
            write!(f, " while removing [{p}]")?;
        }
        Ok(())
    }
}

impl std::error::Error for NotRealizable {}

/// Iterative peeling: repeatedly pick a simplex with nonzero weight whose
/// strict cofaces all have weight zero, append that many indicator columns,
/// and subtract its weight from every face of it. Candidates are taken in
/// decreasing cardinality, then lexicographic order.
pub fn reconstruct_from_total(t: &WeightFunction) -> Result<Relation> {
    reconstruct_from_total_with(t, |_| 0)
}

/// Like [`reconstruct_from_total`], but `choose` picks which of the
/// currently eligible simplices (given in canonical order) to peel next.
pub fn reconstruct_from_total_with<F>(t: &WeightFunction, mut choose: F) -> Result<Relation>
where
    F: FnMut(&[Simplex]) -> usize,
{
    let universe = t.complex().universe();
    let mut simplices: Vec<Simplex> = t.complex().simplices().iter().cloned().collect();
    simplices.sort_by_key(descending);
    let mut current: BTreeMap<Simplex, i64> = simplices
        .iter()
        .map(|s| (s.clone(), t.get(s) as i64))
        .collect();
    let mut empty = t.get(&Simplex::empty()) as i64;
    let mut columns: Vec<Simplex> = Vec::new();

    let snapshot = |current: &BTreeMap<Simplex, i64>, empty: i64| -> Vec<(String, i64)> {
        let mut out: Vec<(String, i64)> = simplices
            .iter()
            .map(|s| (s.display(universe).to_string(), current[s]))
            .collect();
        out.push(("()".into(), empty));
        out
    };

    let bound: u64 = t.sum();
    let mut iterations: u64 = 0;
    loop {
        let eligible: Vec<Simplex> = simplices
            .iter()
            .filter(|s| current[*s] != 0)
            .filter(|s| {
                simplices
                    .iter()
                    .filter(|c| c.len() > s.len() && s.is_face_of(c))
                    .all(|c| current[c] == 0)
            })
            .cloned()
            .collect();
        if eligible.is_empty() {
            break;
        }
        iterations += 1;
        if iterations > bound {
            return Err(Error::Internal(format!(
                "peeling exceeded its bound of {bound} iterations"
            )));
        }
        let pick = choose(&eligible);
        let sigma = eligible
            .get(pick)
            .ok_or_else(|| Error::Internal(format!("choice {pick} out of range")))?
            .clone();
        let amount = current[&sigma];
        columns.extend(std::iter::repeat_n(sigma.clone(), amount as usize));
        let mut first_negative = None;
        for gamma in &simplices {
            if gamma.is_face_of(&sigma) {
                let v = current.get_mut(gamma).unwrap();
                *v -= amount;
                if *v < 0 && first_negative.is_none() {
                    first_negative = Some(gamma.clone());
                }
            }
        }
        empty -= amount;
        if let Some(gamma) = first_negative {
            return Err(Error::NotRealizable(Box::new(NotRealizable {
                label: gamma.display(universe).to_string(),
                value: current[&gamma],
                simplex: gamma,
                peeled: Some(sigma.display(universe).to_string()),
                snapshot: snapshot(&current, empty),
            })));
        }
    }
    // The empty simplex only needs enough mass left over for the columns
    // already emitted; what remains becomes zero columns.
    if empty < 0 {
        return Err(Error::NotRealizable(Box::new(NotRealizable {
            simplex: Simplex::empty(),
            label: "()".into(),
            value: empty,
            peeled: None,
            snapshot: snapshot(&current, empty),
        })));
    }
    columns.extend(std::iter::repeat_n(Simplex::empty(), empty as usize));
    Ok(relation_from_columns(universe, &columns))
}

/// Convenience: the constant function `c` on every simplex and on `∅`.
pub fn constant(complex: SimplicialComplex, c: u64) -> WeightFunction {
    let values = std::iter::once(Simplex::empty())
        .chain(complex.simplices().iter().cloned())
        .map(|s| (s, c))
        .collect();
    WeightFunction {
        complex,
        values,
        kind: WeightKind::Unchecked,
    }
}

/// A weight function over a relation's row labels given as
/// `(canonical simplex string, value)` pairs.
pub fn from_keyed(
    complex: SimplicialComplex,
    entries: &[(&str, u64)],
    kind: WeightKind,
) -> Result<WeightFunction> {
    let mut values = BTreeMap::new();
    for &(key, v) in entries {
        values.insert(crate::complex::parse_simplex(key, complex.universe())?, v);
    }
    WeightFunction::new(complex, values, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::parse_simplex;

    fn r2() -> Relation {
        Relation::from_matrix(
            &["a", "b", "c", "d"],
            &["1", "2", "3", "4", "5", "6"],
            &[
                vec![1, 0, 1, 0, 0, 1],
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 1, 1, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 0],
            ],
        )
        .unwrap()
    }

    fn at(w: &WeightFunction, key: &str) -> u64 {
        w.get(&parse_simplex(key, w.complex().universe()).unwrap())
    }

    #[test]
    fn r2_total_weights() {
        let t = total_weight(&r2());
        assert_eq!(at(&t, "c"), 4);
        assert_eq!(at(&t, "a,c"), 2);
        assert_eq!(at(&t, "a,c,d"), 1);
        assert_eq!(at(&t, "()"), 6);
        assert!(t.is_filtration());
    }

    #[test]
    fn r2_differential_weights() {
        let d = differential_weight(&r2());
        for key in ["a,c,d", "a,b", "a,c", "b,c", "c", "d"] {
            assert_eq!(at(&d, key), 1, "d({key})");
        }
        for key in ["a", "b", "a,d", "c,d", "()"] {
            assert_eq!(at(&d, key), 0, "d({key})");
        }
        assert_eq!(d.sum(), 6);
    }

    #[test]
    fn filtration_checks() {
        let u = r2().x_labels().clone();
        let k = SimplicialComplex::from_generators(
            u.clone(),
            [Simplex::new(vec![0, 1]), Simplex::new(vec![1, 2])],
        )
        .unwrap();
        assert!(constant(k.clone(), 1).is_filtration());
        let bad = from_keyed(k.clone(), &[("a", 0), ("a,b", 1)], WeightKind::Unchecked).unwrap();
        assert!(!bad.is_filtration());
        assert!(matches!(
            from_keyed(k, &[("a", 0), ("a,b", 1)], WeightKind::Total),
            Err(Error::InvalidWeights(_))
        ));
    }

    #[test]
    fn rejects_simplices_outside_the_complex() {
        let k = dowker(&r2());
        assert!(matches!(
            from_keyed(k, &[("a,b,c", 1)], WeightKind::Unchecked),
            Err(Error::UnknownSimplex(_))
        ));
    }

    #[test]
    fn differential_reconstruction_small_cases() {
        let k = dowker(&r2());
        let zero = from_keyed(k.clone(), &[], WeightKind::Differential).unwrap();
        assert_eq!(reconstruct_from_differential(&zero).ny(), 0);

        let twice_a = from_keyed(k, &[("a", 2)], WeightKind::Differential).unwrap();
        let r = reconstruct_from_differential(&twice_a);
        assert_eq!(r.ny(), 2);
        assert_eq!(r.column_support(0), vec![0]);
        assert_eq!(r.column_support(1), vec![0]);
    }

    #[test]
    fn total_reconstruction_of_r2_matches_golden_matrix() {
        let r = reconstruct_from_total(&total_weight(&r2())).unwrap();
        let golden = Relation::from_matrix(
            &["a", "b", "c", "d"],
            &["1", "2", "3", "4", "5", "6"],
            &[
                vec![1, 0, 1, 1, 0, 0],
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 1, 1, 1, 1, 0],
                vec![0, 0, 1, 0, 0, 1],
            ],
        )
        .unwrap();
        assert!(r.equivalent_up_to_columns(&golden));
        assert!(r.equivalent_up_to_columns(&r2()));
        // Canonical order peels the triangle first.
        assert_eq!(r.column_support(0), vec![0, 2, 3]);
    }

    #[test]
    fn constant_filtration_fails_at_b() {
        let u = r2().x_labels().clone();
        let k = SimplicialComplex::from_generators(
            u,
            [Simplex::new(vec![0, 1]), Simplex::new(vec![1, 2])],
        )
        .unwrap();
        let err = reconstruct_from_total(&constant(k, 1)).unwrap_err();
        match err {
            Error::NotRealizable(nr) => {
                assert_eq!(nr.label, "b");
                assert_eq!(nr.value, -1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_simplex_shortfall_is_reported() {
        let k = dowker(&r2());
        let mut values = total_weight(&r2()).values().clone();
        values.insert(Simplex::empty(), 2);
        let t = WeightFunction::new(k, values, WeightKind::Unchecked).unwrap();
        match reconstruct_from_total(&t).unwrap_err() {
            Error::NotRealizable(nr) => assert_eq!(nr.label, "()"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
