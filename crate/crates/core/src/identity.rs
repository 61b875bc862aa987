//! Polynomial identities and the multilinearized identity checker.
//!
//! An identity is a rational-weighted sum of product trees in formal
//! variables, asserted to vanish for all substitutions from the algebra.
//! Checking works by full multilinearization: each variable of degree d in a
//! multihomogeneous component is replaced by d fresh copies and the
//! multilinear part is extracted by summing over all ways of distributing the
//! copies over the variable's leaf positions. The resulting multilinear map
//! vanishes iff it vanishes on basis tuples, and since it is symmetric in the
//! copies of each variable it suffices to test one tuple per multiset of
//! basis indices per variable.
//!
//! This is an equivalence (not just an implication) when the characteristic
//! is 0 or greater than the maximal variable degree, which is enforced as a
//! precondition.

use std::collections::{BTreeMap, HashMap};

use num::rational::BigRational;
use num::traits::One;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;

/// A formal product expression: a leaf variable or a product of two subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductTree {
    Var(usize),
    Mul(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    pub fn var(i: usize) -> ProductTree {
        ProductTree::Var(i)
    }

    pub fn mul(a: ProductTree, b: ProductTree) -> ProductTree {
        ProductTree::Mul(Box::new(a), Box::new(b))
    }

    /// Right-normed principal power x^k = x * (x * (... * x)).
    pub fn power(var: usize, k: u32) -> ProductTree {
        assert!(k >= 1);
        let mut t = ProductTree::var(var);
        for _ in 1..k {
            t = ProductTree::mul(ProductTree::var(var), t);
        }
        t
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            ProductTree::Var(v) => out.push(*v),
            ProductTree::Mul(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Evaluate with the leaf sequence replaced by the given basis vectors.
    /// `next` walks the leaves in the same in-order traversal as
    /// `collect_leaves`. Reference path for the split evaluator's tests.
    #[cfg(test)]
    fn eval(&self, alg: &Algebra, leaf_basis: &[usize], next: &mut usize) -> Vec<Scalar> {
        match self {
            ProductTree::Var(_) => {
                let b = leaf_basis[*next];
                *next += 1;
                alg.basis_vector(b)
            }
            ProductTree::Mul(a, b) => {
                let left = a.eval(alg, leaf_basis, next);
                let right = b.eval(alg, leaf_basis, next);
                if left.iter().all(Scalar::is_zero) || right.iter().all(Scalar::is_zero) {
                    return vec![alg.field().zero(); alg.dim()];
                }
                alg.product(&left, &right).expect("dims agree")
            }
        }
    }
}

/// A weighted sum of product trees asserted to vanish identically.
#[derive(Debug, Clone)]
pub struct IdentityExpr {
    nvars: usize,
    terms: Vec<(BigRational, ProductTree)>,
}

/// Outcome of an identity check, with the first failing substitution if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Per formal variable, the sorted basis indices substituted for its
    /// multilinearized copies in the failing evaluation.
    pub witness: Option<Vec<(usize, Vec<usize>)>>,
}

impl IdentityCheck {
    fn ok() -> IdentityCheck {
        IdentityCheck {
            holds: true,
            witness: None,
        }
    }
}

impl IdentityExpr {
    pub fn new(nvars: usize, terms: Vec<(BigRational, ProductTree)>) -> Result<IdentityExpr> {
        for (_, t) in &terms {
            let mut leaves = Vec::new();
            t.collect_leaves(&mut leaves);
            if let Some(&v) = leaves.iter().find(|&&v| v >= nvars) {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
        }
        Ok(IdentityExpr { nvars, terms })
    }

    /// x*(y*z) + y*(z*x) + z*(x*y), the Jacobi identity.
    pub fn jacobi() -> IdentityExpr {
        let one = BigRational::one;
        let t = |a: usize, b: usize, c: usize| {
            ProductTree::mul(
                ProductTree::var(a),
                ProductTree::mul(ProductTree::var(b), ProductTree::var(c)),
            )
        };
        IdentityExpr {
            nvars: 3,
            terms: vec![(one(), t(0, 1, 2)), (one(), t(1, 2, 0)), (one(), t(2, 0, 1))],
        }
    }

    /// (x*y)*z - x*(y*z), the associator.
    pub fn associator() -> IdentityExpr {
        IdentityExpr {
            nvars: 3,
            terms: vec![
                (
                    BigRational::one(),
                    ProductTree::mul(
                        ProductTree::mul(ProductTree::var(0), ProductTree::var(1)),
                        ProductTree::var(2),
                    ),
                ),
                (
                    -BigRational::one(),
                    ProductTree::mul(
                        ProductTree::var(0),
                        ProductTree::mul(ProductTree::var(1), ProductTree::var(2)),
                    ),
                ),
            ],
        }
    }

    /// (x*y)*x^2 - x*(y*x^2), the Jordan identity (degree 3 in x).
    pub fn jordan() -> IdentityExpr {
        let xsq = || ProductTree::mul(ProductTree::var(0), ProductTree::var(0));
        IdentityExpr {
            nvars: 2,
            terms: vec![
                (
                    BigRational::one(),
                    ProductTree::mul(
                        ProductTree::mul(ProductTree::var(0), ProductTree::var(1)),
                        xsq(),
                    ),
                ),
                (
                    -BigRational::one(),
                    ProductTree::mul(
                        ProductTree::var(0),
                        ProductTree::mul(ProductTree::var(1), xsq()),
                    ),
                ),
            ],
        }
    }

    /// x^k = 0 with the right-normed principal power.
    pub fn power(k: u32) -> IdentityExpr {
        IdentityExpr {
            nvars: 1,
            terms: vec![(BigRational::one(), ProductTree::power(0, k))],
        }
    }

    /// x^i * x^j - x^{i+j}.
    pub fn power_assoc(i: u32, j: u32) -> IdentityExpr {
        IdentityExpr {
            nvars: 1,
            terms: vec![
                (
                    BigRational::one(),
                    ProductTree::mul(ProductTree::power(0, i), ProductTree::power(0, j)),
                ),
                (-BigRational::one(), ProductTree::power(0, i + j)),
            ],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    /// Degree of each term in each variable (leaf counts).
    pub fn multidegrees(&self) -> Vec<Vec<u32>> {
        self.terms
            .iter()
            .map(|(_, t)| {
                let mut leaves = Vec::new();
                t.collect_leaves(&mut leaves);
                let mut deg = vec![0u32; self.nvars];
                for v in leaves {
                    deg[v] += 1;
                }
                deg
            })
            .collect()
    }

    pub fn max_variable_degree(&self) -> u32 {
        self.multidegrees()
            .iter()
            .flat_map(|d| d.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Full multilinearized check on all basis tuples.
    pub fn check(&self, alg: &Algebra) -> Result<IdentityCheck> {
        let n = alg.dim();
        let maxdeg = self.max_variable_degree();
        let p = alg.field().characteristic();
        if p != 0 && p <= maxdeg as u64 {
            return Err(Error::CharacteristicTooSmall { p, degree: maxdeg });
        }
        if n == 0 {
            return Ok(IdentityCheck::ok());
        }

        // Split into multihomogeneous components; each must vanish separately.
        let degrees = self.multidegrees();
        let mut components: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (idx, deg) in degrees.iter().enumerate() {
            components.entry(deg.clone()).or_default().push(idx);
        }

        for (mdeg, term_idxs) in &components {
            let active: Vec<usize> = (0..self.nvars).filter(|&v| mdeg[v] > 0).collect();
            if active.is_empty() {
                continue;
            }
            let choices: Vec<Vec<Vec<usize>>> = active
                .iter()
                .map(|&v| multisets(n, mdeg[v] as usize))
                .collect();
            let mut odo = vec![0usize; active.len()];
            loop {
                let assignment: Vec<&[usize]> = odo
                    .iter()
                    .enumerate()
                    .map(|(a, &i)| choices[a][i].as_slice())
                    .collect();
                let value = self.eval_component(alg, mdeg, term_idxs, &active, &assignment)?;
                if value.iter().any(|s| !s.is_zero()) {
                    let witness = active
                        .iter()
                        .zip(&assignment)
                        .map(|(&v, m)| (v, m.to_vec()))
                        .collect();
                    return Ok(IdentityCheck {
                        holds: false,
                        witness: Some(witness),
                    });
                }
                if !advance(&mut odo, &choices) {
                    break;
                }
            }
        }
        Ok(IdentityCheck::ok())
    }

    /// Evaluate the multilinearization of one multihomogeneous component at
    /// the given basis multisets: for each term, the sum over all bijections
    /// of each variable's copies to its leaf positions of the tree product.
    ///
    /// The sum is computed by recursive multiset splitting: at a product
    /// node, the copies headed into the left subtree form a sub-multiset,
    /// each weighted by the number of copy-subsets realizing it (a product
    /// of binomial coefficients), and the two subtree sums multiply. Shared
    /// sub-multisets are memoized per node, which is what makes degree-7
    /// power identities affordable.
    fn eval_component(
        &self,
        alg: &Algebra,
        mdeg: &[u32],
        term_idxs: &[usize],
        active: &[usize],
        assignment: &[&[usize]],
    ) -> Result<Vec<Scalar>> {
        let f = alg.field();
        let n = alg.dim();
        let mut total = vec![f.zero(); n];

        // Per active variable, the multiset as a count vector over 0..n.
        let full_counts: Counts = assignment
            .iter()
            .map(|m| {
                let mut c = vec![0u8; n];
                for &b in *m {
                    c[b] += 1;
                }
                c
            })
            .collect();

        for &ti in term_idxs {
            let (coeff, tree) = &self.terms[ti];
            debug_assert!({
                let mut leaves = Vec::new();
                tree.collect_leaves(&mut leaves);
                leaves.iter().all(|&v| mdeg[v] > 0 && active.contains(&v))
            });
            let mut nodes = Vec::new();
            let root = flatten_tree(tree, active, &mut nodes);
            let mut memo: HashMap<(usize, Counts), Vec<Scalar>> = HashMap::new();
            let value = eval_bijection_sum(alg, &nodes, root, &full_counts, &mut memo);
            let c = f.from_rational(coeff)?;
            for k in 0..n {
                if !value[k].is_zero() {
                    total[k] = f.add(&total[k], &f.mul(&c, &value[k]));
                }
            }
        }
        Ok(total)
    }
}

/// Count vectors over basis indices, one per active variable.
type Counts = Vec<Vec<u8>>;

enum FlatNode {
    /// Leaf of the active variable with the given slot index.
    Leaf(usize),
    Mul {
        left: usize,
        right: usize,
        /// Leaves per active variable under each child.
        left_leaves: Vec<u32>,
    },
}

fn flatten_tree(tree: &ProductTree, active: &[usize], nodes: &mut Vec<FlatNode>) -> usize {
    match tree {
        ProductTree::Var(v) => {
            let slot = active.iter().position(|w| w == v).expect("active var");
            nodes.push(FlatNode::Leaf(slot));
            nodes.len() - 1
        }
        ProductTree::Mul(a, b) => {
            let left = flatten_tree(a, active, nodes);
            let right = flatten_tree(b, active, nodes);
            let mut left_leaves = vec![0u32; active.len()];
            count_leaves(nodes, left, &mut left_leaves);
            nodes.push(FlatNode::Mul {
                left,
                right,
                left_leaves,
            });
            nodes.len() - 1
        }
    }
}

fn count_leaves(nodes: &[FlatNode], id: usize, out: &mut Vec<u32>) {
    match &nodes[id] {
        FlatNode::Leaf(slot) => out[*slot] += 1,
        FlatNode::Mul { left, right, .. } => {
            count_leaves(nodes, *left, out);
            count_leaves(nodes, *right, out);
        }
    }
}

/// Sum over all bijections of the copies in `counts` to the leaves below
/// `id` of the product-tree value.
fn eval_bijection_sum(
    alg: &Algebra,
    nodes: &[FlatNode],
    id: usize,
    counts: &Counts,
    memo: &mut HashMap<(usize, Counts), Vec<Scalar>>,
) -> Vec<Scalar> {
    let f = alg.field();
    let n = alg.dim();
    if let Some(v) = memo.get(&(id, counts.clone())) {
        return v.clone();
    }
    let result = match &nodes[id] {
        FlatNode::Leaf(slot) => {
            let b = counts[*slot]
                .iter()
                .position(|&c| c == 1)
                .expect("leaf receives exactly one copy");
            alg.basis_vector(b)
        }
        FlatNode::Mul {
            left,
            right,
            left_leaves,
        } => {
            let mut acc = vec![f.zero(); n];
            for_each_split(counts, left_leaves, &mut |left_counts, factor| {
                let right_counts: Counts = counts
                    .iter()
                    .zip(left_counts)
                    .map(|(full, l)| full.iter().zip(l).map(|(a, b)| a - b).collect())
                    .collect();
                let lv = eval_bijection_sum(alg, nodes, *left, left_counts, memo);
                if lv.iter().all(Scalar::is_zero) {
                    return;
                }
                let rv = eval_bijection_sum(alg, nodes, *right, &right_counts, memo);
                if rv.iter().all(Scalar::is_zero) {
                    return;
                }
                let prod = alg.product(&lv, &rv).expect("dims agree");
                let factor = f.integer(factor);
                for k in 0..n {
                    if !prod[k].is_zero() {
                        acc[k] = f.add(&acc[k], &f.mul(&factor, &prod[k]));
                    }
                }
            });
            acc
        }
    };
    memo.insert((id, counts.clone()), result.clone());
    result
}

/// Enumerate the ways to route copies to the left subtree: per variable a
/// sub-count-vector of the given size, weighted by the number of
/// distinguishable copy-subsets realizing it.
fn for_each_split(counts: &Counts, sizes: &[u32], emit: &mut impl FnMut(&Counts, i64)) {
    fn per_var(
        counts: &Counts,
        sizes: &[u32],
        var: usize,
        acc: &mut Counts,
        factor: i64,
        emit: &mut impl FnMut(&Counts, i64),
    ) {
        if var == counts.len() {
            emit(acc, factor);
            return;
        }
        let cv = &counts[var];
        let target = sizes[var];
        // All sub-count-vectors of cv summing to target.
        fn rec(
            cv: &[u8],
            pos: usize,
            remaining: u32,
            cur: &mut Vec<u8>,
            factor: i64,
            k: &mut dyn FnMut(&Vec<u8>, i64),
        ) {
            if pos == cv.len() {
                if remaining == 0 {
                    k(cur, factor);
                }
                return;
            }
            let maxtake = (cv[pos] as u32).min(remaining);
            for take in 0..=maxtake {
                cur.push(take as u8);
                rec(
                    cv,
                    pos + 1,
                    remaining - take,
                    cur,
                    factor * binom(cv[pos] as u32, take),
                    k,
                );
                cur.pop();
            }
        }
        let mut cur = Vec::with_capacity(cv.len());
        rec(cv, 0, target, &mut cur, factor, &mut |sub, fac| {
            acc.push(sub.clone());
            per_var(counts, sizes, var + 1, acc, fac, emit);
            acc.pop();
        });
    }
    let mut acc: Counts = Vec::with_capacity(counts.len());
    per_var(counts, sizes, 0, &mut acc, 1, emit);
}

fn binom(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Odometer increment over ragged choice lists; false when exhausted.
fn advance<T>(odo: &mut [usize], choices: &[Vec<T>]) -> bool {
    for i in (0..odo.len()).rev() {
        odo[i] += 1;
        if odo[i] < choices[i].len() {
            return true;
        }
        odo[i] = 0;
    }
    false
}

/// All non-decreasing sequences of length d over 0..n.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, d, v, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

/// Direct basis-triple evaluation of the Jacobi identity. Returns the first
/// failing triple. Because the identity is already trilinear this agrees
/// with the full multilinearized check.
pub fn jacobi_witness(alg: &Algebra) -> Option<(usize, usize, usize)> {
    let n = alg.dim();
    let f = alg.field();
    for i in 0..n {
        let ei = alg.basis_vector(i);
        for j in 0..n {
            let ej = alg.basis_vector(j);
            for k in 0..n {
                let ek = alg.basis_vector(k);
                let jk = alg.basis_product(j, k);
                let ki = alg.basis_product(k, i);
                let ij = alg.basis_product(i, j);
                let a = alg.product(&ei, &jk).expect("dims agree");
                let b = alg.product(&ej, &ki).expect("dims agree");
                let c = alg.product(&ek, &ij).expect("dims agree");
                let zero = (0..n).all(|t| {
                    let s = f.add(&a[t], &f.add(&b[t], &c[t]));
                    s.is_zero()
                });
                if !zero {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn is_jacobi(alg: &Algebra) -> bool {
    jacobi_witness(alg).is_none()
}

pub fn is_jordan(alg: &Algebra) -> Result<IdentityCheck> {
    IdentityExpr::jordan().check(alg)
}

/// Result of the bounded power-associativity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerAssocCheck {
    pub holds: bool,
    /// The failing exponent pair (i, j) and substitution, if any.
    pub failure: Option<(u32, u32, Vec<(usize, Vec<usize>)>)>,
    /// The largest total degree i + j that was verified.
    pub degree_bound: u32,
}

/// Checks x^i * x^j = x^{i+j} for all i + j <= dim + 1. This is a bounded
/// verification: it certifies power-associativity up to the stated degree,
/// not for all degrees.
pub fn is_power_associative(alg: &Algebra) -> Result<PowerAssocCheck> {
    let bound = alg.dim() as u32 + 1;
    for d in 2..=bound {
        for i in 1..d {
            let j = d - i;
            let res = IdentityExpr::power_assoc(i, j).check(alg)?;
            if !res.holds {
                return Ok(PowerAssocCheck {
                    holds: false,
                    failure: Some((i, j, res.witness.unwrap_or_default())),
                    degree_bound: bound,
                });
            }
        }
    }
    Ok(PowerAssocCheck {
        holds: true,
        failure: None,
        degree_bound: bound,
    })
}
