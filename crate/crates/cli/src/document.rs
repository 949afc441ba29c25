//! JSON documents exchanged by the command line tool.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use schubert_smt::{normalize_index, IndexTuple, PluckerMonomial, Polynomial, Tableau};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    /// Decimal integer.
    pub coeff: String,
    pub monomial: Vec<Vec<usize>>,
}

/// A Plücker polynomial on `G(r, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDocument {
    pub r: usize,
    pub n: usize,
    pub terms: Vec<TermDocument>,
}

impl PolynomialDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed polynomial document: {e}")))
    }

    /// Sorts each row, tracking the sign of the sorting permutation, and
    /// drops terms with a repeated index in some row.
    pub fn to_polynomial(&self) -> Result<Polynomial, CliError> {
        let mut f = Polynomial::zero(self.r, self.n, 0);
        for (k, term) in self.terms.iter().enumerate() {
            let mut coeff: BigInt = term.coeff.trim().parse().map_err(|_| {
                CliError::Input(format!(
                    "term {k}: coefficient {:?} is not an integer",
                    term.coeff
                ))
            })?;
            if coeff.is_zero() {
                return Err(CliError::Input(format!("term {k}: zero coefficient")));
            }
            let mut rows = Vec::with_capacity(term.monomial.len());
            for row in &term.monomial {
                if row.len() != self.r {
                    return Err(CliError::Input(format!(
                        "term {k}: row {row:?} does not have {} entries",
                        self.r
                    )));
                }
                let (sign, tuple) = normalize_index(row, self.n)
                    .map_err(|e| CliError::Input(format!("term {k}: {e}")))?;
                match tuple {
                    Some(t) => {
                        rows.push(t);
                        if sign < 0 {
                            coeff = -coeff;
                        }
                    }
                    None => {
                        coeff = BigInt::zero();
                        break;
                    }
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let m = PluckerMonomial::new(rows)
                .map_err(|e| CliError::Input(format!("term {k}: {e}")))?;
            f.add_term(coeff, m)
                .map_err(|e| CliError::Input(format!("term {k}: {e}")))?;
        }
        Ok(f)
    }

    /// Canonical form: sorted rows, merged terms, monomial order.
    pub fn from_polynomial(f: &Polynomial) -> Self {
        Self {
            r: f.r(),
            n: f.n(),
            terms: f
                .terms()
                .map(|(m, c)| TermDocument {
                    coeff: c.to_string(),
                    monomial: rows_of(m.rows()),
                })
                .collect(),
        }
    }

    pub fn normalized(&self) -> Result<Self, CliError> {
        Ok(Self::from_polynomial(&self.to_polynomial()?))
    }
}

pub fn rows_of(rows: &[IndexTuple]) -> Vec<Vec<usize>> {
    rows.iter().map(|r| r.values().to_vec()).collect()
}

pub fn tableau_rows(t: &Tableau) -> Vec<Vec<usize>> {
    rows_of(t.rows())
}

/// The named tableaux on `X(w_5)` at one rank, as plain rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDocument {
    pub n: usize,
    pub w: Vec<Vec<usize>>,
    pub x: Vec<Vec<Vec<usize>>>,
    pub y1: Vec<Vec<usize>>,
    pub y2: Vec<Vec<usize>>,
    pub z: Vec<Vec<usize>>,
}

impl From<&schubert_smt::Generators> for GeneratorsDocument {
    fn from(o: &schubert_smt::Generators) -> Self {
        Self {
            n: o.rank.n(),
            w: o.w.iter().map(|w| w.values().to_vec()).collect(),
            x: o.x.iter().map(tableau_rows).collect(),
            y1: tableau_rows(&o.y1),
            y2: tableau_rows(&o.y2),
            z: tableau_rows(&o.z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(terms: &[(&str, &[&[usize]])]) -> PolynomialDocument {
        PolynomialDocument {
            r: 2,
            n: 4,
            terms: terms
                .iter()
                .map(|(c, m)| TermDocument {
                    coeff: c.to_string(),
                    monomial: m.iter().map(|r| r.to_vec()).collect(),
                })
                .collect(),
        }
    }

    #[test]
    fn unsorted_rows_carry_a_sign() {
        let d = doc(&[("3", &[&[2, 1], &[3, 4]])]).normalized().unwrap();
        assert_eq!(d, doc(&[("-3", &[&[1, 2], &[3, 4]])]));
    }

    #[test]
    fn repeated_index_drops_the_term() {
        let mixed = doc(&[("1", &[&[1, 2], &[3, 4]]), ("1", &[&[1, 3]])]);
        assert!(mixed.to_polynomial().is_err());
        let d = doc(&[("1", &[&[2, 2], &[3, 4]]), ("1", &[&[1, 3], &[2, 4]])])
            .normalized()
            .unwrap();
        assert_eq!(d.terms.len(), 1);
    }

    #[test]
    fn opposite_terms_cancel() {
        let d = doc(&[("1", &[&[1, 2], &[3, 4]]), ("1", &[&[3, 4], &[2, 1]])])
            .normalized()
            .unwrap();
        assert!(d.terms.is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(doc(&[("0", &[&[1, 2]])]).to_polynomial().is_err());
        assert!(doc(&[("x", &[&[1, 2]])]).to_polynomial().is_err());
        assert!(doc(&[("1", &[&[1, 5]])]).to_polynomial().is_err());
        assert!(doc(&[("1", &[&[1, 2, 3]])]).to_polynomial().is_err());
        assert!(PolynomialDocument::parse("{\"r\":2}").is_err());
        assert!(PolynomialDocument::parse("{\"r\":2,\"n\":4,\"terms\":[],\"extra\":1}").is_err());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let d = doc(&[(big, &[&[1, 2]])]).normalized().unwrap();
        assert_eq!(d.terms[0].coeff, big);
    }
}
