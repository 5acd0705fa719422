//! Linear algebra over F3 for permutation modules of groups acting on
//! paired points: splitting off the sign (odd) part, commutant
//! dimensions, and the orbit-count cross-check against the dimension of
//! the commutant of the full permutation module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModF3Error {
    /// Group does not commute with the pairing i <-> m+i.
    PairingMissing,
    NotTransitive,
    /// Matrix dimensions beyond what the solver handles.
    Overscale,
}

impl fmt::Display for ModF3Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModF3Error::PairingMissing => write!(f, "action does not respect the sign pairing"),
            ModF3Error::NotTransitive => write!(f, "action is not transitive"),
            ModF3Error::Overscale => write!(f, "module too large"),
        }
    }
}

/// A list of square matrices over F3 (entries 0,1,2), one per group
/// generator, all of the same dimension.
#[derive(Debug, Clone)]
pub struct F3Module {
    pub dim: usize,
    pub gens: Vec<Vec<Vec<u8>>>,
}

fn zero_matrix(dim: usize) -> Vec<Vec<u8>> {
    vec![vec![0u8; dim]; dim]
}

/// Permutation module F3^n with basis the points: generator g becomes
/// the matrix with M[g(i)][i] = 1.
pub fn permutation_module_f3(group: &PermGroup) -> F3Module {
    let dim = group.degree();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let mut mat = zero_matrix(dim);
            for i in 0..dim {
                mat[g.apply(i)][i] = 1;
            }
            mat
        })
        .collect();
    F3Module { dim, gens }
}

/// Split the permutation module on 2m paired points into the odd part
/// (basis e_i - e_{m+i}) and the even part (basis e_i + e_{m+i}),
/// returning `(odd, even)`. Errors unless every generator commutes
/// with the pairing.
pub fn split_odd_even(group: &PermGroup) -> Result<(F3Module, F3Module), ModF3Error> {
    let n = group.degree();
    if n % 2 != 0 {
        return Err(ModF3Error::PairingMissing);
    }
    let m = n / 2;
    let swap: Vec<usize> = (0..n).map(|i| (i + m) % n).collect();
    let swap = Permutation::from_images(swap).expect("pairing is a bijection");
    for g in group.generators() {
        if g.compose(&swap) != swap.compose(g) {
            return Err(ModF3Error::PairingMissing);
        }
    }
    let mut odd_gens = Vec::new();
    let mut even_gens = Vec::new();
    for g in group.generators() {
        // g sends e_i to e_{g(i)}; on v_i = e_i - e_{m+i} this gives
        // +v_j or -v_j according to which copy g(i) lands in, and on
        // w_i = e_i + e_{m+i} always +w_j.
        let mut odd = zero_matrix(m);
        let mut even = zero_matrix(m);
        for i in 0..m {
            let img = g.apply(i);
            if img < m {
                odd[img][i] = 1;
                even[img][i] = 1;
            } else {
                odd[img - m][i] = 2; // -1 mod 3
                even[img - m][i] = 1;
            }
        }
        odd_gens.push(odd);
        even_gens.push(even);
    }
    Ok((
        F3Module {
            dim: m,
            gens: odd_gens,
        },
        F3Module {
            dim: m,
            gens: even_gens,
        },
    ))
}

/// Dimension over F3 of the space of matrices commuting with every
/// generator matrix: nullity of the stacked system X A_g = A_g X.
pub fn commutant_dimension(module: &F3Module) -> Result<usize, ModF3Error> {
    let d = module.dim;
    if d > 64 {
        return Err(ModF3Error::Overscale);
    }
    let unknowns = d * d; // X[r][c] flattened as r*d + c
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for a in &module.gens {
        // (X A - A X)[i][j] = sum_k X[i][k] A[k][j] - A[i][k] X[k][j]
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u8; unknowns];
                for k in 0..d {
                    row[i * d + k] = (row[i * d + k] + a[k][j]) % 3;
                    row[k * d + j] = (row[k * d + j] + 3 - a[i][k] % 3) % 3;
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(unknowns - rank_f3(&mut rows, unknowns))
}

fn rank_f3(rows: &mut [Vec<u8>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = if rows[rank][c] == 1 { 1 } else { 2 }; // inverse mod 3
        for x in rows[rank].iter_mut() {
            *x = (*x * inv) % 3;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x = (*x + (3 - f) * p) % 3;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Number of orbits of a point stabilizer on all points. For a
/// transitive action this equals the permutation character inner
/// product <chi, chi> and hence the commutant dimension of the
/// permutation module whenever the characteristic does not divide the
/// group order; used as an independent cross-check.
pub fn stabilizer_orbit_count(group: &PermGroup) -> Result<usize, ModF3Error> {
    if !group.is_transitive() || group.degree() == 0 {
        return Err(ModF3Error::NotTransitive);
    }
    let stab = group
        .point_stabilizer(0)
        .map_err(|_| ModF3Error::NotTransitive)?;
    Ok(stab.orbits().len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::build_wreath;

    #[test]
    fn s5_permutation_module_commutant() {
        // transitive action on 5 points: commutant is spanned by I and
        // the all-ones matrix
        let s5 = PermGroup::symmetric(5);
        let module = permutation_module_f3(&s5);
        assert_eq!(commutant_dimension(&module).unwrap(), 2);
    }

    #[test]
    fn wreath_split_dimensions_and_commutants() {
        let w = build_wreath(&PermGroup::symmetric(5), true);
        let (odd, even) = split_odd_even(&w).unwrap();
        assert_eq!(odd.dim, 5);
        assert_eq!(even.dim, 5);
        // odd part: signed 5-dimensional module, absolutely
        // irreducible, commutant = F3
        assert_eq!(commutant_dimension(&odd).unwrap(), 1);
        // even part: plain S5 permutation module, commutant dim 2
        assert_eq!(commutant_dimension(&even).unwrap(), 2);
        // full 10-point module: 1 + 2 = 3, matching the stabilizer
        // orbit count
        let full = permutation_module_f3(&w);
        assert_eq!(commutant_dimension(&full).unwrap(), 3);
        assert_eq!(stabilizer_orbit_count(&w).unwrap(), 3);
    }

    #[test]
    fn split_rejects_unpaired_action() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(split_odd_even(&s4).unwrap_err(), ModF3Error::PairingMissing);
    }

    #[test]
    fn orbit_count_requires_transitivity() {
        let triv = PermGroup::trivial(3);
        assert_eq!(
            stabilizer_orbit_count(&triv).unwrap_err(),
            ModF3Error::NotTransitive
        );
    }

    #[test]
    fn sign_flip_module_splits_diagonally() {
        // wreath over the trivial group: odd generators are diagonal
        // sign matrices
        let w = build_wreath(&PermGroup::trivial(3), false);
        let (odd, _) = split_odd_even(&w).unwrap();
        for g in &odd.gens {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert_eq!(g[i][j], 0);
                    } else {
                        assert!(g[i][j] == 1 || g[i][j] == 2);
                    }
                }
            }
        }
    }
}
