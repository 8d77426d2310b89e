class Consts:
    series_tol = 1e-14
    max_terms = 10_000

    panels = 256
    nodes_per_panel = 8
    grid_density = 2049
    # exponents of the graded substitutions next to tau=t and tau=a
    kernel_grading = 8
    base_grading = 4

    fd_rel_step = 1e-6

    lambda_scan_points = 129
    lambda_xtol = 1e-10

    far_left_limit = -40.0

    # grid-halving estimate allowed between iterated derivative levels
    resolution_tol = 1e-6

    # accuracy floors of sweep checks that run through the iterated derivative tables
    # or the far-left surrogate
    telescoping_tol = 1e-5
    liouville_tol = 1e-3

    oracle_panels = 10 ** 6
    oracle_degree = 20
    oracle_dps = 40
    sweep_panels = 64

    svg_width = 800
    svg_height = 600
