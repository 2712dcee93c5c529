//! Physical constants used by the tendency solver and the energy metric.

/// Constant set for one run. Values are fixed at construction and should be
/// recorded in run metadata alongside any produced artifact.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalConstants {
    /// Coriolis parameter f (1/s).
    pub coriolis_f: f64,
    /// Latent heat of vaporization L (J/kg).
    pub latent_heat: f64,
    /// Specific heat at constant pressure c_p (J/(kg K)).
    pub c_p: f64,
    /// Gas constant R as used by the tendency equations.
    pub gas_r: f64,
    /// Gas constant of water vapor R_v (J/(kg K)).
    pub r_v: f64,
    /// Gas constant of dry air R_d (J/(kg K)).
    pub r_d: f64,
    /// Earth radius (m).
    pub earth_radius: f64,
    /// Reference temperature for the energy metric (K).
    pub t_ref: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            coriolis_f: 7.29e-5,
            latent_heat: 2.5e6,
            c_p: 1005.0,
            gas_r: 8.314,
            r_v: 461.5,
            r_d: 287.0,
            earth_radius: 6.371e6,
            t_ref: 273.15,
        }
    }
}

impl PhysicalConstants {
    pub fn validate(&self) -> bool {
        [
            self.coriolis_f,
            self.latent_heat,
            self.c_p,
            self.gas_r,
            self.r_v,
            self.r_d,
            self.earth_radius,
            self.t_ref,
        ]
        .iter()
        .all(|&v| v > 0.0 && v.is_finite())
    }

    /// Key=value lines for run metadata.
    pub fn metadata(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        let _ = write!(
            s,
            "coriolis_f={}\nlatent_heat={}\nc_p={}\ngas_r={}\nr_v={}\nr_d={}\nearth_radius={}\nt_ref={}",
            self.coriolis_f,
            self.latent_heat,
            self.c_p,
            self.gas_r,
            self.r_v,
            self.r_d,
            self.earth_radius,
            self.t_ref
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_positive() {
        assert!(PhysicalConstants::default().validate());
    }
}
