use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{Rational, Spacing, WeightSet};

use super::fallback::{arithmetic_fallback, FallbackRoute};
use super::log::ConstructionLog;
use super::{construct, weight_cycle, Branch, Options};

/// Proper weighting of a nice regular graph from an arbitrary three-element set.
pub fn weight_with_set(g: &Graph, q: &WeightSet, options: &Options) -> Result<Certificate> {
    if let Some((u, v)) = g.k2_component() {
        return Err(Error::NotNice(u, v));
    }
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if g.m() == 0 {
        return Certificate::build(g, q, &[], Branch::Edgeless, None, ConstructionLog::default());
    }
    let cert = match (k, q.spacing()) {
        (2, _) => {
            let w = weight_cycle(g, q)?
                .ok_or_else(|| Error::Invariant("no proper weighting of a cycle found".into()))?;
            Certificate::build(g, q, &w, Branch::CycleDp, None, ConstructionLog::default())?
        }
        (_, Spacing::Arithmetic) => {
            let (w, route) = arithmetic_fallback(g, q, options.budget)?;
            let branch = match route {
                FallbackRoute::Exhaustive => Branch::ArithmeticExhaustive,
                FallbackRoute::LocalSearch => Branch::ArithmeticLocalSearch,
            };
            Certificate::build(g, q, &w, branch, None, ConstructionLog::default())?
        }
        (_, spacing) => {
            let (d1, d2, negate, branch) = match spacing {
                Spacing::WiderAbove => (q.lower_gap(), q.upper_gap(), false, Branch::Shifted),
                _ => (q.upper_gap(), q.lower_gap(), true, Branch::NegatedShifted),
            };
            let built = construct(g, d1.clone(), d2.clone(), options)?;
            let shift = q.b();
            let w: Vec<Rational> = built
                .state
                .weights()
                .into_iter()
                .map(|x| if negate { shift - x } else { shift + x })
                .collect();
            let mut cert = Certificate::build(g, q, &w, branch, Some(built.construction), built.log)?;
            cert.internal_set = Some(WeightSet::centered(&d1, &d2)?);
            if options.audit {
                cert.audits = built.audits;
            }
            cert
        }
    };
    if !cert.is_proper() {
        return Err(Error::Invariant(format!(
            "{:?} branch produced {} conflicts",
            cert.branch, cert.verdict.conflict_count
        )));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::complete(4)
    }

    #[test]
    fn wider_below_negates() {
        let q = WeightSet::from_ints(5, 7, 8).unwrap();
        let cert = weight_with_set(&k4(), &q, &Options::default()).unwrap();
        assert_eq!(cert.branch, Branch::NegatedShifted);
        assert_eq!(cert.internal_set, Some(WeightSet::from_ints(-1, 0, 2).unwrap()));
        assert!(cert.weights().unwrap().iter().all(|w| q.contains(w)));
        assert!(cert.is_proper());
    }

    #[test]
    fn wider_above_shifts() {
        let q = WeightSet::from_ints(0, 1, 3).unwrap();
        let cert = weight_with_set(&k4(), &q, &Options::default()).unwrap();
        assert_eq!(cert.branch, Branch::Shifted);
        assert_eq!(cert.internal_set, Some(WeightSet::from_ints(-1, 0, 2).unwrap()));
        assert!(cert.is_proper());
    }

    #[test]
    fn arithmetic_uses_search() {
        let q = WeightSet::from_ints(1, 2, 3).unwrap();
        let cert = weight_with_set(&k4(), &q, &Options::default()).unwrap();
        assert_eq!(cert.branch, Branch::ArithmeticExhaustive);
        assert!(cert.is_proper());
    }

    #[test]
    fn cycles_and_edgeless() {
        let q = WeightSet::from_ints(1, 2, 3).unwrap();
        let cert = weight_with_set(&Graph::cycle(7), &q, &Options::default()).unwrap();
        assert_eq!(cert.branch, Branch::CycleDp);
        let empty = Graph::from_edges(3, std::iter::empty()).unwrap();
        assert_eq!(weight_with_set(&empty, &q, &Options::default()).unwrap().branch, Branch::Edgeless);
    }

    #[test]
    fn rejections() {
        let q = WeightSet::from_ints(-1, 0, 2).unwrap();
        let k2 = Graph::complete(2);
        assert!(matches!(weight_with_set(&k2, &q, &Options::default()), Err(Error::NotNice(0, 1))));
        let p3 = Graph::path(3);
        assert!(matches!(weight_with_set(&p3, &q, &Options::default()), Err(Error::NotRegular)));
    }
}
