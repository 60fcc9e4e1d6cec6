//! Resolving command-line group and factorization arguments.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Args;
use qtriangle::qt::plus_minus_homomorphisms;
use qtriangle::{
    catalog_group, labeled_catalog_group, make_factorization, FiniteGroup, Homomorphism, Subgroup,
    UniqueFactorization,
};

/// A catalog name, or otherwise a path to a group file.
pub fn resolve_group(arg: &str) -> Result<FiniteGroup> {
    if let Ok(g) = catalog_group(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    if !path.exists() {
        bail!("`{arg}` is neither a catalog group nor an existing group file");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    FiniteGroup::from_json(&text).with_context(|| format!("loading group file {}", path.display()))
}

/// Element labels, falling back to indices for group files.
pub fn labels(arg: &str, g: &FiniteGroup) -> Vec<String> {
    match labeled_catalog_group(arg) {
        Ok(l) => l.labels,
        Err(_) => g.elements().map(|i| i.to_string()).collect(),
    }
}

#[derive(Debug, Args)]
pub struct FactorizationArgs {
    /// Catalog name (Z<n>, D<n>, S3, S4, Q8, V4, AxB) or path to a group file.
    pub group: String,
    /// Elements of G+, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub plus: Vec<usize>,
    /// Elements of G-, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub minus: Vec<usize>,
    /// Read --plus and --minus as generator lists.
    #[arg(long)]
    pub generators: bool,
}

impl FactorizationArgs {
    pub fn resolve(&self) -> Result<UniqueFactorization> {
        let g = resolve_group(&self.group)?;
        let sub = |elems: &[usize], which: &str| -> Result<Subgroup> {
            if let Some(&bad) = elems.iter().find(|&&x| x >= g.order()) {
                bail!("element {bad} of {which} is out of range for order {}", g.order());
            }
            if self.generators {
                Ok(g.closure(elems))
            } else {
                Subgroup::new(&g, elems).with_context(|| format!("{which} is not a subgroup"))
            }
        };
        let plus = sub(&self.plus, "G+")?;
        let minus = sub(&self.minus, "G-")?;
        Ok(make_factorization(&g, &plus, &minus)?)
    }
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub factorization: FactorizationArgs,
    /// Index of ξ in the order printed by `homs`.
    #[arg(long)]
    pub xi: usize,
    /// Index of η in the order printed by `homs`.
    #[arg(long)]
    pub eta: usize,
}

impl PairArgs {
    pub fn resolve(&self) -> Result<(UniqueFactorization, Homomorphism, Homomorphism)> {
        let uf = self.factorization.resolve()?;
        let homs = plus_minus_homomorphisms(&uf);
        let pick = |i: usize, name: &str| {
            homs.get(i)
                .cloned()
                .with_context(|| format!("{name} index {i} out of range: there are {} homomorphisms", homs.len()))
        };
        let xi = pick(self.xi, "xi")?;
        let eta = pick(self.eta, "eta")?;
        Ok((uf, xi, eta))
    }
}
