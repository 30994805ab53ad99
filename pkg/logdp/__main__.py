import logdp

if __name__ == '__main__':
    logdp.main()
