"""Convergence of the many-antenna rate approximation.

The logarithmic large-array approximation should approach the exact
closed-form rate as the antenna count grows; the printed gap shrinks
roughly like 1/na.
"""
from ansec import PowerSplit, SystemConfig, secrecy_rate, secrecy_rate_large_na

P = 10.0
SPLIT = PowerSplit(0.5)


def main() -> None:
    print("exact vs large-array secrecy rate, P=10 dB linear 10, ne=2, phi=0.5")
    print("   na     exact   large-na       gap")
    for na in (4, 8, 16, 32, 64, 128, 256):
        cfg = SystemConfig(na=na, ne=2)
        exact = secrecy_rate(cfg, P, SPLIT).c
        approx = secrecy_rate_large_na(cfg, P, SPLIT)
        print(f"  {na:4d}  {exact:8.4f}  {approx:9.4f}  {abs(exact - approx):8.4f}")


if __name__ == "__main__":
    main()
