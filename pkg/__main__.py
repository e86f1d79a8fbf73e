"""Allow running as: python -m lattice_miner"""
from main import main

if __name__ == "__main__":
    main()
