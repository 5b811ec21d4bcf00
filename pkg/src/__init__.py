# src package for gptkit.
