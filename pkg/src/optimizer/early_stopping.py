import logging

logger = logging.getLogger(__name__)


class StallMonitor:
    """Stop a smoothing level once the energy stops improving."""
    def __init__(self, patience=50, verbose=False, delta=1e-15):
        self.patience = patience
        self.verbose = verbose
        self.delta = delta
        self.counter = 0
        self.best_energy = None
        self.stalled = False

    def __call__(self, energy):
        if self.best_energy is None:
            self.best_energy = energy
        elif energy > self.best_energy - self.delta * max(1.0, abs(self.best_energy)):
            self.counter += 1
            if self.verbose:
                logger.debug(f'StallMonitor counter: {self.counter} out of {self.patience}')
            if self.counter >= self.patience:
                self.stalled = True
        else:
            self.best_energy = energy
            self.counter = 0
        return self.stalled

    def reset(self):
        self.counter = 0
        self.best_energy = None
        self.stalled = False
