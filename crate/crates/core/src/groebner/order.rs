use std::cmp::Ordering;

use crate::algebra::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Graded by `Σ w_i e_i`, ties broken reverse lexicographically.
    WeightedGrevlex(Vec<u32>),
}

/// A monomial order together with a variable priority: `priority[0]` is the most
/// significant variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..nvars).collect() }
    }

    /// Lex with an explicit variable priority, e.g. `[1, 0]` for `y > x`.
    pub fn lex_with_priority(priority: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, priority: (0..nvars).collect() }
    }

    pub fn weighted(weights: Vec<u32>) -> Self {
        let n = weights.len();
        MonomialOrder { kind: OrderKind::WeightedGrevlex(weights), priority: (0..n).collect() }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// True when every polynomial's normal form has degree (plain or weighted, matching
    /// the order) no larger than the polynomial itself.
    pub fn is_graded(&self) -> bool {
        !matches!(self.kind, OrderKind::Lex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        match &self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| self.revlex(ea, eb)),
            OrderKind::WeightedGrevlex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| self.revlex(ea, eb)),
        }
    }

    fn revlex(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &i in self.priority.iter().rev() {
            if ea[i] != eb[i] {
                return eb[i].cmp(&ea[i]);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_priority() {
        let o = MonomialOrder::lex_with_priority(vec![1, 0]);
        // y > x^5 when y is the most significant variable
        assert_eq!(o.cmp(&Monomial::new(vec![0, 1]), &Monomial::new(vec![5, 0])), Ordering::Greater);
        let o = MonomialOrder::lex(2);
        assert_eq!(o.cmp(&Monomial::new(vec![0, 1]), &Monomial::new(vec![5, 0])), Ordering::Less);
    }

    #[test]
    fn weighted_degree_first() {
        let o = MonomialOrder::weighted(vec![2, 3]);
        // y^2 (weight 6) vs x^3 (weight 6): tie broken by revlex, x^3 > y^2
        assert_eq!(o.cmp(&Monomial::new(vec![3, 0]), &Monomial::new(vec![0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&Monomial::new(vec![0, 2]), &Monomial::new(vec![2, 0])), Ordering::Greater);
    }
}
