"""Achievable secrecy rate vs SNR for a few antenna counts.

Sweeps total SNR with an equal power split and prints the rate each
antenna count achieves, with a Monte Carlo spot check at 10 dB.
"""
from ansec import (
    PowerSplit,
    SystemConfig,
    capacity_bob,
    capacity_eve,
    mc_capacities,
    secrecy_rate,
)

SPLIT = PowerSplit(0.5)
ANTENNAS = (2, 4, 8, 16)


def main() -> None:
    print("secrecy rate (bits/channel-use), equal split, one eavesdropper")
    header = "snr_db " + "".join(f"  na={na:<5d}" for na in ANTENNAS)
    print(header)
    for snr_db in range(-10, 31, 5):
        p = 10.0 ** (snr_db / 10.0)
        cells = "".join(
            f"  {secrecy_rate(SystemConfig(na=na), p, SPLIT).c:8.4f}"
            for na in ANTENNAS
        )
        print(f"{snr_db:6d} {cells}")

    print()
    print("spot check at 10 dB: closed forms vs 1e5-sample simulation")
    print("   na       C1_closed       C1_mc    C2_closed       C2_mc")
    for na in ANTENNAS:
        cfg = SystemConfig(na=na)
        est1, est2 = mc_capacities(cfg, 10.0, SPLIT, n_samples=100_000, seed=1)
        c1 = capacity_bob(cfg, 10.0, SPLIT)
        c2 = capacity_eve(cfg, SPLIT)
        print(
            f"  {na:3d}  {c1:12.4f} {est1.mean:11.4f}"
            f" {c2:12.4f} {est2.mean:11.4f}"
        )


if __name__ == "__main__":
    main()
