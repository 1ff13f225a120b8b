from .xor import NcCombination, nc_combine, nc_combine_frames, nc_extract, nc_extract_frames

__all__ = ["NcCombination", "nc_combine", "nc_combine_frames", "nc_extract", "nc_extract_frames"]
