//! Witnesses for failed predicates, attached to error messages.

use ssp_core::{Error as CoreError, Monomial, MonomialIdeal, Partition};

use crate::error::CliError;

pub fn for_ideal(err: CoreError, ideal: &MonomialIdeal) -> CliError {
    let detail = match err {
        CoreError::NotStronglyStable => unstable_ideal(ideal),
        CoreError::NotSymmetric => asymmetric_ideal(ideal),
        CoreError::NotArtinian => missing_power(ideal),
        _ => None,
    };
    attach(err, detail)
}

pub fn for_partition(err: CoreError, p: &Partition) -> CliError {
    let detail = match err {
        CoreError::NotStronglyStable => unstable_partition(p),
        CoreError::NotTotallySymmetric => asymmetric_partition(p),
        _ => None,
    };
    attach(err, detail)
}

fn attach(error: CoreError, detail: Option<String>) -> CliError {
    match detail {
        Some(detail) => CliError::Witness { error, detail },
        None => CliError::Core(error),
    }
}

fn unstable_ideal(ideal: &MonomialIdeal) -> Option<String> {
    let d = ideal.dim();
    ideal.gens().iter().find_map(|g| {
        (1..d)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .find_map(|(i, j)| {
                let moved = g.exchange(i, j)?;
                (!ideal.contains(&moved).ok()?)
                    .then(|| format!("x{}/x{} * {g} = {moved} is not in the ideal", i + 1, j + 1))
            })
    })
}

fn asymmetric_ideal(ideal: &MonomialIdeal) -> Option<String> {
    ideal.gens().iter().find_map(|g| {
        let swapped = g
            .orbit()
            .into_iter()
            .find(|m| !ideal.contains(m).unwrap_or(true))?;
        Some(format!(
            "{swapped}, a permutation of {g}, is not in the ideal"
        ))
    })
}

fn missing_power(ideal: &MonomialIdeal) -> Option<String> {
    let j = ideal
        .pure_power_degrees()
        .iter()
        .position(Option::is_none)?;
    Some(format!("no pure power of x{} among the generators", j + 1))
}

fn unstable_partition(p: &Partition) -> Option<String> {
    p.cells().iter().find_map(|c| {
        let hook = p.hook_vector(c).ok()?;
        (!hook.is_weakly_increasing())
            .then(|| format!("cell {c:?} has hook vector {:?}", hook.arms()))
    })
}

fn asymmetric_partition(p: &Partition) -> Option<String> {
    p.cells().iter().find_map(|c| {
        let image = Monomial::new(c.clone())
            .orbit()
            .into_iter()
            .find(|m| !p.contains(m.exponents()))?;
        Some(format!(
            "cell {c:?} is present but its permutation {:?} is not",
            image.exponents()
        ))
    })
}
