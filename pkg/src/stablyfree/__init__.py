"""Exact, certificate-checked constructions around a stably free module over
k[a,x,y,t]/(t^2 + t(a^2+xy)) in characteristic 2."""

__version__ = "0.1.0"
