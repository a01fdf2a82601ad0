//! Gamma, digamma, zeta, eta and Dirichlet beta at a few landmark points.

use std::f64::consts::{LN_2, PI};

use loglog_lab::specfun::{
    beta_prime_half, digamma, dirichlet_beta, eta, eta_prime, gamma, log_gamma, zeta, zeta_prime,
    EULER_GAMMA,
};

fn main() -> loglog_lab::Result<()> {
    println!("Γ(1/4)        = {:.15}", gamma(0.25)?);
    println!("ln Γ(1/6)     = {:.15}", log_gamma(1.0 / 6.0)?);
    println!("ψ(1/2)        = {:.15}  (−γ − 2 ln 2 = {:.15})", digamma(0.5)?, -EULER_GAMMA - 2.0 * LN_2);
    println!("ζ(2)          = {:.15}  (π²/6 = {:.15})", zeta(2.0)?, PI * PI / 6.0);
    println!("ζ′(2)         = {:.15}", zeta_prime(2.0)?);
    println!("η(1/2)        = {:.15}", eta(0.5)?);
    println!("η′(1)         = {:.15}", eta_prime(1.0)?);
    println!("β(1/2)        = {:.15}", dirichlet_beta(0.5)?);
    println!("β(2) Catalan  = {:.15}", dirichlet_beta(2.0)?);
    println!("β′(1/2)       = {:.15}", beta_prime_half()?);
    Ok(())
}
