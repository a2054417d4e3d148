"""Optimizing the information/noise power split.

Shows the secrecy rate as a function of the split fraction phi, the
optimizer's interior solution, and how the high-SNR optimum in the
working variable z = 1/phi compares across solution regimes.
"""
from ansec import (
    PowerSplit,
    SystemConfig,
    from_db,
    high_snr_optimal_z,
    optimize_phi,
    optimize_phi_adaptive,
    secrecy_rate,
)


def main() -> None:
    cfg, p = SystemConfig(na=4), from_db(20.0)

    print("rate vs split fraction, na=4, ne=1, P=20 dB")
    print("  phi     rate")
    for i in range(1, 20):
        phi = i / 20.0
        print(f" {phi:4.2f}  {secrecy_rate(cfg, p, PowerSplit(phi)).c:7.4f}")

    res = optimize_phi(cfg, p)
    print()
    print(
        f"optimizer: phi*={res.phi_star:.6f}  z*={res.z_star:.6f}"
        f"  c*={res.c_star:.6f}  ({res.iterations} refinement steps)"
    )

    print()
    print("fixed split vs per-realization (adaptive) split, na=2, ne=1")
    print("  snr_db    fixed  adaptive      gain")
    for snr_db in (2.0, 5.0, 10.0, 20.0):
        power = from_db(snr_db)
        fixed = optimize_phi(SystemConfig(na=2), power).c_star
        adaptive = optimize_phi_adaptive(SystemConfig(na=2), power)
        print(f"  {snr_db:6.1f}  {fixed:7.4f}  {adaptive:8.4f}  {adaptive - fixed:+8.4f}")

    print()
    print("high-SNR optima of z = 1/phi by regime")
    print("  na=2, one eavesdropper      :", high_snr_optimal_z(SystemConfig(na=2), "na2-closed"))
    for na in (4, 8, 64):
        z = high_snr_optimal_z(SystemConfig(na=na), "exact-ne1")
        print(f"  na={na:<3d} one eavesdropper     : {z:.6f}")
    for ne in (1, 2, 4):
        z = high_snr_optimal_z(SystemConfig(na=128, ne=ne), "large-na")
        z_asym = high_snr_optimal_z(SystemConfig(na=128, ne=ne), "large-na-asymptotic")
        print(f"  many antennas, ne={ne}        : {z:.6f}  (asymptotic 1+sqrt(ne) = {z_asym:.6f})")


if __name__ == "__main__":
    main()
