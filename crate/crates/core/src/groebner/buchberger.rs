//! Multivariate division and Buchberger's algorithm under the lex order.
//!
//! The output is the reduced monic Groebner basis, which is unique for an
//! ideal and an order, so regression tests can compare bases verbatim. The
//! only pair-skipping optimization is Buchberger's first criterion (coprime
//! leading monomials); the ideals this crate meets are tiny and auditability
//! beats speed.

use num::rational::BigRational;

use crate::error::{Error, Result};

use super::poly::Polynomial;

/// Safety valve: the theory guarantees termination, this guards against
/// pathological input sizes.
const MAX_PAIRS: usize = 200_000;

/// Normal form of f modulo the list: no term of the result is divisible by
/// any leading monomial of `gens`, and f - result lies in the ideal they
/// generate.
pub fn reduce(f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    let mut rem = f.clone();
    'outer: loop {
        // Largest reducible term first.
        let target: Option<(_, BigRational, usize)> = rem
            .terms()
            .rev()
            .find_map(|(m, c)| {
                gens.iter()
                    .enumerate()
                    .filter(|(_, g)| !g.is_zero())
                    .find(|(_, g)| g.leading_monomial().unwrap().divides(m))
                    .map(|(gi, _)| (m.clone(), c.clone(), gi))
            });
        match target {
            None => break 'outer,
            Some((m, c, gi)) => {
                let g = &gens[gi];
                let shift = m.div(g.leading_monomial().unwrap()).unwrap();
                let scale = &c / g.leading_coefficient().unwrap();
                rem = rem.sub(&g.mul_term(&shift, &scale));
            }
        }
    }
    rem
}

/// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lmf = f.leading_monomial().expect("nonzero");
    let lmg = g.leading_monomial().expect("nonzero");
    let lcm = lmf.lcm(lmg);
    let sf = lcm.div(lmf).unwrap();
    let sg = lcm.div(lmg).unwrap();
    let cf = f.leading_coefficient().unwrap().recip();
    let cg = g.leading_coefficient().unwrap().recip();
    f.mul_term(&sf, &cf).sub(&g.mul_term(&sg, &cg))
}

/// The reduced monic Groebner basis of the ideal generated by `gens`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Basis elements, monic, inter-reduced, sorted by descending leading
    /// monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.polys)
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > MAX_PAIRS {
            return Err(Error::Invalid(format!(
                "Buchberger pair budget of {MAX_PAIRS} exceeded"
            )));
        }
        let (f, g) = (&basis[i], &basis[j]);
        if f.leading_monomial()
            .unwrap()
            .is_coprime_with(g.leading_monomial().unwrap())
        {
            continue;
        }
        let s = s_polynomial(f, g);
        let rem = reduce(&s, &basis);
        if !rem.is_zero() {
            let idx = basis.len();
            basis.push(rem);
            for k in 0..idx {
                pairs.push((k, idx));
            }
        }
    }
    Ok(reduce_basis(basis))
}

/// Minimize (drop elements whose leading monomial is divisible by another's)
/// then inter-reduce and normalize to monic, yielding the canonical reduced
/// basis.
fn reduce_basis(mut basis: Vec<Polynomial>) -> GroebnerBasis {
    // Minimization.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lm_i = basis[i].leading_monomial().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lm_j = basis[j].leading_monomial().unwrap();
            if lm_j.divides(&lm_i) && (lm_j != &lm_i || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Inter-reduction to a fixpoint.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|&(j, g)| (j != i)).map(|(j, g)| g.clone())
                .collect();
            let r = reduce(&basis[i], &others);
            if r != basis[i] {
                basis[i] = r;
                changed = true;
            }
        }
        basis.retain(|g| !g.is_zero());
        if !changed {
            break;
        }
    }

    for g in &mut basis {
        *g = g.monic();
    }
    basis.sort_by(|a, b| {
        b.leading_monomial()
            .unwrap()
            .cmp(a.leading_monomial().unwrap())
    });
    GroebnerBasis { polys: basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::monomial::VarList;
    use crate::groebner::parse::parse_polynomial;
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<VarList> {
        Arc::new(VarList::from_names(names).unwrap())
    }

    fn p(text: &str, vars: &Arc<VarList>) -> Polynomial {
        parse_polynomial(text, vars).unwrap()
    }

    #[test]
    fn reduce_by_own_generator() {
        let vars = ring(&["x", "y"]);
        let xy = p("x*y", &vars);
        assert!(reduce(&xy, &[xy.clone()]).is_zero());
    }

    #[test]
    fn single_generator_basis() {
        let vars = ring(&["x"]);
        let gb = buchberger(&[p("x", &vars)]).unwrap();
        assert_eq!(gb.polys(), &[p("x", &vars)]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let vars = ring(&["x", "y"]);
        let gens = [p("x^2", &vars), p("x*y", &vars), p("y^2", &vars)];
        let gb = buchberger(&gens).unwrap();
        let strs: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x^2", "x*y", "y^2"]);
    }

    #[test]
    fn reproduces_lex_basis_of_example_ideal() {
        let vars = ring(&["x", "y", "z"]);
        let gens = [
            p("x*y", &vars),
            p("y*z", &vars),
            p("z^2", &vars),
            p("y^2 - x*z", &vars),
            p("x^3", &vars),
        ];
        let gb = buchberger(&gens).unwrap();
        let strs: Vec<String> = gb.polys().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            strs,
            vec!["x^3", "x*y", "x*z - y^2", "y^3", "y*z", "z^2"]
        );
        // Every original generator reduces to zero.
        for g in &gens {
            assert!(gb.contains(g));
        }
        // Every S-polynomial of basis pairs reduces to zero.
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = s_polynomial(&gb.polys()[i], &gb.polys()[j]);
                assert!(gb.reduce(&s).is_zero(), "S({i}, {j})");
            }
        }
        // reduce(x*z, G) = y^2; a standard monomial is its own normal form.
        let nf = gb.reduce(&p("x*z", &vars));
        assert_eq!(nf.to_string(), "y^2");
        assert_eq!(gb.reduce(&p("x^2", &vars)).to_string(), "x^2");
    }

    #[test]
    fn permuting_generators_gives_identical_basis() {
        let vars = ring(&["x", "y", "z"]);
        let gens = vec![
            p("x*y", &vars),
            p("y*z", &vars),
            p("z^2", &vars),
            p("y^2 - x*z", &vars),
            p("x^3", &vars),
        ];
        let gb = buchberger(&gens).unwrap();
        let mut permuted = gens.clone();
        permuted.reverse();
        permuted.swap(0, 2);
        let gb2 = buchberger(&permuted).unwrap();
        assert_eq!(gb, gb2);
    }

    #[test]
    fn s_polynomial_cancellation() {
        let vars = ring(&["x", "y"]);
        // S(x^2 - 1, x*y - 1) = x - y after the leading terms cancel... the
        // raw S-polynomial is y(x^2-1)/x^2*... = x*... ; just check leading
        // terms cancelled.
        let f = p("x^2 - 1", &vars);
        let g = p("x*y - 1", &vars);
        let s = s_polynomial(&f, &g);
        assert_eq!(s.to_string(), "x - y");
    }
}
