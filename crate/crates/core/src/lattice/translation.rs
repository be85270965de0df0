use serde::Serialize;

use super::{check_bounded, covers, Direction};
use crate::error::{invalid, Result};
use crate::partition::{KRectangle, Partition};

/// Both sides of the rectangle-translation identity for one `λ`:
/// the covers of `λ ∪ □` and the translates `μ̄ ∪ □` of the covers of `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationWitness {
    pub lambda: Partition,
    pub rectangle: Partition,
    pub covers_of_union: Vec<Partition>,
    pub translated_covers: Vec<Partition>,
    pub equal: bool,
}

pub fn check_rectangle_translation(
    lambda: &Partition,
    rect: KRectangle,
    k: usize,
) -> Result<TranslationWitness> {
    check_bounded(lambda, k)?;
    if rect.k() != k {
        return Err(invalid(format!("rectangle is a {}-rectangle, not a {k}-rectangle", rect.k())));
    }
    let square = rect.to_partition();
    let covers_of_union = covers(&lambda.union(&square), k, Direction::Up)?;
    let mut translated_covers: Vec<Partition> = covers(lambda, k, Direction::Up)?
        .iter()
        .map(|mu| mu.union(&square))
        .collect();
    translated_covers.sort();
    let equal = covers_of_union == translated_covers;
    Ok(TranslationWitness {
        lambda: lambda.clone(),
        rectangle: square,
        covers_of_union,
        translated_covers,
        equal,
    })
}
