class ToleranceMixin:
    """Standard numerical tolerances shared across the frame-energy modules."""

    # Unit vectors & Gram matrices
    UNIT_NORM_TOL     = 1e-8
    LOAD_RENORM_BAND  = 1e-6
    GRAM_DIAG_TOL     = 1e-10
    GRAM_PSD_TOL      = 1e-8
    SIGN_ZERO_TOL     = 1e-9

    # Linear algebra
    SYMMETRY_TOL      = 1e-10
    RANK_TOL          = 1e-8
    JACOBI_SWEEPS     = 100

    # Potentials
    DOMAIN_SLACK      = 1e-9
    NONSMOOTH_TOL     = 1e-12

    # Frames & certificates
    FRAME_TOL         = 1e-9
    GALE_TOL          = 1e-8
    CERTIFICATE_TOL   = 1e-8

    # Auxiliary problem M(c, p, N)
    MSTAR_GRID        = 10_000
    MSTAR_XATOL       = 1e-12
    MSTAR_TIE_TOL     = 1e-12
    ORACLE_MAX_N      = 8

    @classmethod
    def tolerances(cls) -> dict:
        """
        Collect every tolerance constant into a plain dict.
        Names are the upper-case attribute names defined on the mixin.
        """
        return {
            name: getattr(cls, name)
            for name in dir(ToleranceMixin)
            if name.isupper()
        }
