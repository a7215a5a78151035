import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'crossflip.settings')
django.setup()
