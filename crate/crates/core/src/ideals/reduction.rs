//! Leading-coefficient reduction over the empty variable set.
//!
//! Elements here are combinations of unit powers; the leading degree is the
//! largest tensor degree in the support. Two reduction styles are provided:
//!
//! - [`reduce_by_generators`]: cancel the leading term by multiplying a
//!   generator with a scaled unit power. The unit-power product contributes
//!   a binomial factor, so this needs rational coefficients.
//! - [`baxter_reduce`]: cancel the leading term with a scalar multiple of an
//!   iterated Baxter shift of a generator. Only ring operations and P are
//!   used, so this works whenever the leading coefficients divide.
//!
//! Every run returns a [`ReductionTrace`] that reconstructs the input
//! exactly: input = sum of subtracted elements + remainder.

use crate::coeff::{binomial, RingId, Scalar};
use crate::shuffle::ShuffleElement;

use super::{leading_unit_power, IdealError};

/// One cancellation step of a reduction.
#[derive(Debug, Clone, PartialEq)]
pub enum ReductionStep {
    /// subtracted = cofactor * generators[generator]
    Multiply {
        generator: usize,
        cofactor: ShuffleElement,
        subtracted: ShuffleElement,
    },
    /// subtracted = scale * P^shift(generators[generator])
    BaxterShift {
        generator: usize,
        shift: usize,
        scale: Scalar,
        subtracted: ShuffleElement,
    },
}

impl ReductionStep {
    pub fn subtracted(&self) -> &ShuffleElement {
        match self {
            ReductionStep::Multiply { subtracted, .. } => subtracted,
            ReductionStep::BaxterShift { subtracted, .. } => subtracted,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub remainder: ShuffleElement,
}

impl ReductionTrace {
    /// Check that the trace reconstructs `original` from `generators`:
    /// each step re-derives its subtracted element and the sum of all
    /// subtracted elements plus the remainder equals the input.
    pub fn reconstructs(
        &self,
        original: &ShuffleElement,
        generators: &[ShuffleElement],
    ) -> Result<bool, IdealError> {
        let mut acc = self.remainder.clone();
        for step in &self.steps {
            let rederived = match step {
                ReductionStep::Multiply {
                    generator,
                    cofactor,
                    subtracted,
                } => {
                    let p = cofactor.product(&generators[*generator])?;
                    if &p != subtracted {
                        return Ok(false);
                    }
                    p
                }
                ReductionStep::BaxterShift {
                    generator,
                    shift,
                    scale,
                    subtracted,
                } => {
                    let p = generators[*generator].baxter_p_iter(*shift).scale(scale)?;
                    if &p != subtracted {
                        return Ok(false);
                    }
                    p
                }
            };
            acc = acc.add(&rederived)?;
        }
        Ok(&acc == original)
    }
}

fn validate_unit_power_inputs(
    f: &ShuffleElement,
    generators: &[ShuffleElement],
) -> Result<(), IdealError> {
    if f.ctx().num_vars() != 0 {
        return Err(IdealError::UnsupportedContext {
            reason: "reduction operates over the empty variable set".into(),
        });
    }
    for (i, g) in generators.iter().enumerate() {
        f.check_ctx(g)?;
        if g.is_zero() {
            return Err(IdealError::ZeroGenerator { index: i });
        }
    }
    Ok(())
}

/// Reduce `f` by cancelling its leading term against scaled unit-power
/// multiples of the generators, highest degree first, lowest applicable
/// generator index first. The remainder's leading degree is below every
/// generator's leading degree, or the remainder is zero.
pub fn reduce_by_generators(
    f: &ShuffleElement,
    generators: &[ShuffleElement],
) -> Result<ReductionTrace, IdealError> {
    if f.ctx().ring() != RingId::RationalQ {
        return Err(IdealError::NonQAlgebra {
            ring: f.ctx().ring(),
        });
    }
    validate_unit_power_inputs(f, generators)?;
    let leads: Vec<(usize, Scalar)> = generators
        .iter()
        .map(|g| leading_unit_power(g).expect("nonzero generator"))
        .collect();

    let mut rest = f.clone();
    let mut steps = Vec::new();
    while let Some((degree, lead)) = leading_unit_power(&rest) {
        let Some((index, (gen_degree, gen_lead))) = leads
            .iter()
            .enumerate()
            .find(|(_, (d, _))| *d <= degree)
            .map(|(i, l)| (i, l.clone()))
        else {
            break;
        };
        let binom = binomial(degree as i64, gen_degree as i64, RingId::RationalQ)?;
        let q = lead.checked_div(&binom.checked_mul(&gen_lead)?)?;
        let cofactor = ShuffleElement::unit_power(f.ctx().clone(), degree - gen_degree, q)?;
        let subtracted = cofactor.product(&generators[index])?;
        rest = rest.sub(&subtracted)?;
        steps.push(ReductionStep::Multiply {
            generator: index,
            cofactor,
            subtracted,
        });
    }
    Ok(ReductionTrace {
        steps,
        remainder: rest,
    })
}

/// Reduce `f` by cancelling its leading term against scalar multiples of
/// iterated Baxter shifts of the generators. A step applies when the
/// leading coefficient of `f` is divisible by a generator's leading
/// coefficient; the remainder is irreducible by scaled shifts.
pub fn baxter_reduce(
    f: &ShuffleElement,
    generators: &[ShuffleElement],
) -> Result<ReductionTrace, IdealError> {
    validate_unit_power_inputs(f, generators)?;
    let leads: Vec<(usize, Scalar)> = generators
        .iter()
        .map(|g| leading_unit_power(g).expect("nonzero generator"))
        .collect();

    let mut rest = f.clone();
    let mut steps = Vec::new();
    while let Some((degree, lead)) = leading_unit_power(&rest) {
        let applicable = leads.iter().enumerate().find_map(|(i, (d, gl))| {
            if *d > degree {
                return None;
            }
            lead.checked_div_exact(gl).ok().map(|q| (i, *d, q))
        });
        let Some((index, gen_degree, scale)) = applicable else {
            break;
        };
        let shift = degree - gen_degree;
        let subtracted = generators[index].baxter_p_iter(shift).scale(&scale)?;
        rest = rest.sub(&subtracted)?;
        steps.push(ReductionStep::BaxterShift {
            generator: index,
            shift,
            scale,
            subtracted,
        });
    }
    Ok(ReductionTrace {
        steps,
        remainder: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::{AlgebraCtx, TensorWord};

    fn ctx(weight_num: i64) -> AlgebraCtx {
        AlgebraCtx::rational(&[], weight_num, 1)
    }

    fn unit(ctx: &AlgebraCtx, degree: usize) -> ShuffleElement {
        ShuffleElement::from_word(ctx.clone(), TensorWord::unit_power(degree))
    }

    #[test]
    fn reduce_unit_cube_by_square_at_weight_zero() {
        // 1^{(x)3} = 1/2 (1^{(x)2})^2 when the weight is 0
        let c = ctx(0);
        let f = unit(&c, 2);
        let gens = [unit(&c, 1)];
        let trace = reduce_by_generators(&f, &gens).unwrap();
        assert!(trace.remainder.is_zero());
        assert_eq!(trace.steps.len(), 1);
        match &trace.steps[0] {
            ReductionStep::Multiply { cofactor, .. } => {
                let expect =
                    ShuffleElement::unit_power(c.clone(), 1, Scalar::rational(1, 2)).unwrap();
                assert_eq!(cofactor, &expect);
            }
            _ => panic!("expected a multiply step"),
        }
        assert!(trace.reconstructs(&f, &gens).unwrap());
    }

    #[test]
    fn reduce_zero_is_empty_trace() {
        let c = ctx(0);
        let gens = [unit(&c, 1)];
        let trace = reduce_by_generators(&ShuffleElement::zero(c.clone()), &gens).unwrap();
        assert!(trace.steps.is_empty());
        assert!(trace.remainder.is_zero());
    }

    #[test]
    fn reduce_unit_cube_at_weight_one_takes_two_steps() {
        // at weight 1 the first cancellation leaves -1/2 1^{(x)2}, which the
        // generator then clears
        let c = ctx(1);
        let f = unit(&c, 2);
        let gens = [unit(&c, 1)];
        let trace = reduce_by_generators(&f, &gens).unwrap();
        assert!(trace.remainder.is_zero());
        assert_eq!(trace.steps.len(), 2);
        assert!(trace.reconstructs(&f, &gens).unwrap());
    }

    #[test]
    fn baxter_reduce_uses_shifts() {
        // 1^{(x)3} = P(1^{(x)2})
        let c = ctx(1);
        let f = unit(&c, 2);
        let gens = [unit(&c, 1)];
        let trace = baxter_reduce(&f, &gens).unwrap();
        assert!(trace.remainder.is_zero());
        assert_eq!(trace.steps.len(), 1);
        match &trace.steps[0] {
            ReductionStep::BaxterShift { shift, scale, .. } => {
                assert_eq!(*shift, 1);
                assert!(scale.is_one());
            }
            _ => panic!("expected a shift step"),
        }
        assert!(trace.reconstructs(&f, &gens).unwrap());
    }

    #[test]
    fn baxter_reduce_scalar_by_unit_generator() {
        let c = ctx(1);
        let f = ShuffleElement::unit_power(c.clone(), 0, Scalar::rational(7, 2)).unwrap();
        let gens = [ShuffleElement::one(c.clone())];
        let trace = baxter_reduce(&f, &gens).unwrap();
        assert!(trace.remainder.is_zero());
        assert!(trace.reconstructs(&f, &gens).unwrap());
    }

    #[test]
    fn baxter_reduce_stops_below_generator_degree() {
        // leading degree 1 < generator degree 2: untouched
        let c = ctx(1);
        let f = unit(&c, 1).add(&ShuffleElement::one(c.clone())).unwrap();
        let gens = [unit(&c, 2)];
        let trace = baxter_reduce(&f, &gens).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.remainder, f);
    }

    #[test]
    fn reduction_rejects_non_rational_ring() {
        let p = crate::coeff::Prime::new(5).unwrap();
        let c = AlgebraCtx::new(
            RingId::PrimeField(p),
            Vec::new(),
            Scalar::mod_p(1, p),
        )
        .unwrap();
        let f = unit(&c, 1);
        assert!(matches!(
            reduce_by_generators(&f, &[f.clone()]),
            Err(IdealError::NonQAlgebra { .. })
        ));
        // but the Baxter form works over any ring
        assert!(baxter_reduce(&f, &[f.clone()]).is_ok());
    }

    #[test]
    fn integer_ring_divisibility_limits_baxter_steps() {
        let c = AlgebraCtx::new(
            RingId::IntegerZ,
            Vec::new(),
            Scalar::from_i64(0, RingId::IntegerZ),
        )
        .unwrap();
        let three = ShuffleElement::unit_power(c.clone(), 2, Scalar::from_i64(3, RingId::IntegerZ))
            .unwrap();
        let two_gen =
            ShuffleElement::unit_power(c.clone(), 1, Scalar::from_i64(2, RingId::IntegerZ))
                .unwrap();
        let trace = baxter_reduce(&three, &[two_gen.clone()]).unwrap();
        assert_eq!(trace.remainder, three); // 2 does not divide 3 in Z
        let six = ShuffleElement::unit_power(c.clone(), 2, Scalar::from_i64(6, RingId::IntegerZ))
            .unwrap();
        let trace = baxter_reduce(&six, &[two_gen.clone()]).unwrap();
        assert!(trace.remainder.is_zero());
        assert!(trace.reconstructs(&six, &[two_gen]).unwrap());
    }
}
