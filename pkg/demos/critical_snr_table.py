"""Critical SNR of positive secrecy under an equal power split.

For each antenna count and channel-estimation error level, prints the
bisected exact threshold next to its closed-form upper bound. 'inf'
marks cases where no finite power achieves positive secrecy.
"""
from ansec import CsiError, PowerSplit, SystemConfig, critical_snr

SPLIT = PowerSplit(0.5)


def fmt(db: float) -> str:
    return f"{db:7.2f}"


def main() -> None:
    print("critical SNR in dB (exact / upper bound), equal split, ne=1")
    print("   na    err=0.0            err=0.1            err=0.2")
    for na in (2, 4, 6, 8, 10):
        cells = []
        for s2 in (0.0, 0.1, 0.2):
            err = CsiError(s2) if s2 > 0 else None
            res = critical_snr(SystemConfig(na=na), SPLIT, err)
            cells.append(f"{fmt(res.p_c_exact_db)} /{fmt(res.p_c_bound_db)}")
        print(f"  {na:3d}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
